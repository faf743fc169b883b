"""The uniquely 2-chromatic P4 system of order 109.

Points are 1..28 plus three primed copies of 1..27.  Labels are mapped to
integers as k -> k, k' -> 28 + k, k'' -> 55 + k, k''' -> 82 + k, so primed
notation can be kept in the data below and checked against the source by eye.
"""

from __future__ import annotations

import re
from functools import lru_cache

from ..core import Colouring, ExtensionContext, Pattern, PathBlock, PathSystem, canonicalize, relabel
from .forced28 import forced28_blocks

ORDER = 109
_OFFSETS = (0, 28, 55, 82)


def point(k: int, primes: int = 0) -> int:
    """Integer label of point ``k`` carrying ``primes`` primes."""
    if primes == 0:
        if not 1 <= k <= 28:
            raise ValueError(f"unprimed points run 1..28, got {k}")
        return k
    if not 1 <= k <= 27 or primes > 3:
        raise ValueError(f"primed points run 1..27 with at most three primes, got {k}{chr(39) * primes}")
    return _OFFSETS[primes] + k


def name(label: int) -> str:
    """Inverse of :func:`point`, e.g. ``name(55) == "27'"``."""
    for primes in (3, 2, 1):
        if label > _OFFSETS[primes]:
            return f"{label - _OFFSETS[primes]}" + "'" * primes
    return str(label)


_TOKEN = re.compile(r"^\(?([^()']+)\)?('*)$")


def parse_token(token: str, k: int | None = None) -> int:
    m = _TOKEN.match(token.strip())
    if not m:
        raise ValueError(f"cannot parse point {token!r}")
    expr, primes = m.groups()
    value = eval(expr, {"__builtins__": {}}, {"k": k})  # expressions are static data in this module
    return point(int(value), len(primes))


def parse_paths(text: str, k: int | None = None) -> list[tuple[int, ...]]:
    """Parse ``"(a,b,c,d), (e,f,g,h)"`` where points may use expressions in ``k``."""
    out = []
    for body in re.findall(r"\(((?:[^()]|\([^()]*\))*)\)", text):
        out.append(tuple(parse_token(t, k) for t in body.split(",")))
    return out


def swapped_base() -> list[PathBlock]:
    """The order-28 forced-pair system with the names of 27 and 28 exchanged."""
    swap = {v: v for v in range(1, 29)}
    swap[27], swap[28] = 28, 27
    return relabel(forced28_blocks(), swap)


def primed_copy(blocks: list[PathBlock], primes: int) -> list[PathBlock]:
    mapping = {v: point(v, primes) for v in range(1, 28)}
    mapping[28] = 28
    return relabel(blocks, mapping)


ODD_1_25 = range(1, 26, 2)

_R = """(27',k,2',k+1), (26',k,4',k+1), (25',k,6',k+1), (24',k,8',k+1), (23',k,10',k+1),
(22',k,12',k+1), (21',k,14',k+1), (20',k,16',k+1), (19',k,18',k+1), (27',k+1,3',k),
(26',k+1,5',k), (25',k+1,7',k), (24',k+1,9',k), (23',k+1,11',k), (22',k+1,13',k),
(21',k+1,15',k), (20',k+1,17',k)"""

_S = """(27'',k,2'',k+1), (26'',k,4'',k+1), (25'',k,6'',k+1), (24'',k,8'',k+1), (23'',k,10'',k+1),
(22'',k,12'',k+1), (21'',k,14'',k+1), (20'',k,16'',k+1), (1'',k,19'',k+1)"""
_S_EXTRA = "(18'',25,4'',26), (18'',23,8'',24), (18'',21,12'',22), (18'',19,16'',20)"
_S_DROP = """(27'',1,2'',2), (26'',3,4'',4), (25'',5,6'',6), (24'',7,8'',8), (23'',9,10'',10),
(22'',11,12'',12), (21'',13,14'',14), (20'',15,16'',16), (26'',25,4'',26), (24'',23,8'',24),
(22'',21,12'',22), (20'',19,16'',20)"""

_T1 = """(27'',k+1,3'',k), (26'',k+1,5'',k), (25'',k+1,7'',k), (24'',k+1,9'',k), (23'',k+1,11'',k),
(22'',k+1,13'',k), (21'',k+1,15'',k), (20'',k+1,17'',k)"""
_T2 = """(27''',k,1''',k+1), (26''',k,4''',k+1), (25''',k,6''',k+1), (24''',k,8''',k+1),
(23''',k,10''',k+1), (22''',k,12''',k+1), (21''',k,14''',k+1), (20''',k,16''',k+1)"""
_T3 = """(27''',k+1,3''',k), (26''',k+1,5''',k), (25''',k+1,7''',k), (24''',k+1,9''',k),
(23''',k+1,11''',k), (22''',k+1,13''',k), (21''',k+1,15''',k), (20''',k+1,17''',k),
(2''',k+1,18''',k)"""

_U = """(26',k'',2',(k+1)''), (25',k'',5',(k+1)''), (24',k'',7',(k+1)''), (23',k'',9',(k+1)''),
(22',k'',11',(k+1)''), (21',k'',13',(k+1)''), (20',k'',15',(k+1)''), (19',k'',17',(k+1)''),
(26',(k+1)'',4',k''), (25',(k+1)'',6',k''), (24',(k+1)'',8',k''), (23',(k+1)'',10',k''),
(22',(k+1)'',12',k''), (21',(k+1)'',14',k''), (20',(k+1)'',16',k''), (19',(k+1)'',18',k'')"""
_U_EXTRA = """(26',25'',2',26''), (25',25'',5',27''), (24',25'',7',27''), (23',25'',9',27''),
(22',25'',11',27''), (21',25'',13',27''), (20',25'',15',27''), (19',25'',17',27''),
(26',26'',4',25''), (24',26'',8',25''), (22',26'',12',25''), (20',26'',16',25''),
(19',27'',18',25''), (21',27'',14',25''), (23',27'',10',25''), (25',27'',6',25'')"""

_V = """(26',k''',2',(k+1)'''), (25',k''',5',(k+1)'''), (24',k''',7',(k+1)'''), (23',k''',9',(k+1)'''),
(22',k''',11',(k+1)'''), (21',k''',13',(k+1)'''), (20',k''',15',(k+1)'''), (19',k''',17',(k+1)''')"""
_V_EXTRA = """(24',5''',7',27'''), (23',7''',9',27'''), (22',9''',11',27'''), (21',11''',13',27'''),
(20',13''',15',27'''), (19',15''',17',27''')"""
_V_DROP = """(24',5''',7',6'''), (23',7''',9',8'''), (22',9''',11',10'''), (21',11''',13',12'''),
(20',13''',15',14'''), (19',15''',17',16''')"""

_W = """(26',(k+1)''',4',k'''), (25',(k+1)''',6',k'''), (24',(k+1)''',8',k'''), (23',(k+1)''',10',k'''),
(22',(k+1)''',12',k'''), (21',(k+1)''',14',k'''), (20',(k+1)''',16',k'''), (19',(k+1)''',18',k''')"""
_W_EXTRA = "(23''',6',27''',25'), (21''',10',27''',23'), (19''',14',27''',21'), (17''',18',27''',19')"
_W_DROP = "(25',24''',6',23'''), (23',22''',10',21'''), (21',20''',14',19'''), (19',18''',18',17''')"

_X = """(26''',k'',1''',(k+1)''), (25''',k'',4''',(k+1)''), (24''',k'',6''',(k+1)''),
(23''',k'',8''',(k+1)''), (22''',k'',10''',(k+1)''), (21''',k'',12''',(k+1)''),
(20''',k'',14''',(k+1)''), (19''',k'',16''',(k+1)''), (26''',(k+1)'',2''',k''),
(25''',(k+1)'',5''',k''), (24''',(k+1)'',7''',k''), (23''',(k+1)'',9''',k''),
(22''',(k+1)'',11''',k''), (21''',(k+1)'',13''',k''), (20''',(k+1)'',15''',k''),
(19''',(k+1)'',17''',k''), (3''',(k+1)'',18''',k'')"""

# The 94 paths found by computer search that cover the edges left over by the families.
TABLE_94 = """
(17,19''',1,18'') (1,27'',27,2') (19,19''',2,19') (21,19''',3,18'')
(3,26'',27,4') (23,19''',4,19') (25,19''',5,18'') (5,25'',27''',27)
(1',27''',2',27'') (1'',27',26'',3') (3'',27''',3',2'') (5'',27''',4',27'')
(7'',27''',5',27) (9'',27''',8',27) (11'',27''',12',27) (13'',27''',16',27)
(15'',27''',20',27) (17'',27''',22',27) (19'',27''',24',27) (5''',27'',8',2''')
(8',4''',27,7') (7''',27'',12',2''') (12',4''',3',4'') (9''',27'',16',2''')
(16',4''',7',1''') (11''',27'',20',2''') (20',4''',9',27) (13''',27'',22',2''')
(22',4''',11',27) (15''',27'',24',2''') (24',4''',13',27) (17''',27'',26',27)
(21''',27'',2''',27) (23''',27'',3''',5') (25''',27'',19''',6) (27'',26''',27,15')
(2,2'',27,17') (2,18'',6,19') (6,6'',27,19') (6'',3',8'',8)
(8'',27,21',1''') (4,4'',27,23') (4,18'',7,24'') (7,19''',8,19')
(8,18'',9,23'') (9,19''',10,19') (23'',27''',26',2''') (26',4''',15',1''')
(27''',21'',13,18'') (13,19''',11,18'') (11,22'',27,6') (22'',3',10'',10)
(10,18'',12,19') (10'',27,25',1''') (12,12'',3',14'') (12,19''',14,19')
(12'',27,16'',3') (16'',16,19',18) (14'',14,18'',15) (14'',27,18'',3')
(15,20'',27,10') (15,19''',16,18'') (20'',3',24'',27) (18,18'',20,19')
(18,19''',22,19') (20,19''',24,18'') (22,18'',26,19''') (24,19',1''',5')
(26,19',2''',2') (2',4''',17',1''') (5',2''',3',6''') (6''',27,8''',3')
(4',2''',7',3''') (4',4''',19',3''') (15',2''',6',26'') (15',3''',9',2''')
(9',1''',11',2''') (11',3''',13',2''') (13',1''',23',2''') (1''',27',26''',3')
(4''',6',24''',3') (24''',27,10''',3') (17',2''',10',26'') (17',3''',21',2''')
(21',4''',10',22''') (23',3''',25',2''') (23',4''',14',26'') (25',4''',18',26'')
(2''',14',20''',3') (14',27,12''',3') (2''',18',18''',3') (18',27,14''',3')
(18''',27,16''',3') (3',22''',27,20''')
"""


def _over(template: str, ks) -> list[tuple[int, ...]]:
    return [p for k in ks for p in parse_paths(template, k)]


def _minus(paths: list[tuple[int, ...]], drop: str) -> list[tuple[int, ...]]:
    dropped = {canonicalize(p) for p in parse_paths(drop)}
    kept = [p for p in paths if canonicalize(p) not in dropped]
    if len(kept) != len(paths) - len(dropped):
        raise AssertionError("a removed path is missing from its family")
    return kept


@lru_cache(maxsize=None)
def families() -> dict[str, tuple[tuple[int, ...], ...]]:
    """All block families of the order-109 system, in their written orientation."""
    base = swapped_base()
    fam: dict[str, list[tuple[int, ...]]] = {
        "B": base,
        "B'": primed_copy(base, 1),
        "B''": primed_copy(base, 2),
        "B'''": primed_copy(base, 3),
        "P1": parse_paths("(27,1',27'',27'), (27,3',27'',27'''), (27,1'',27''',27'), (27',27,1''',27'')"),
        "P2": parse_paths("(26'',1',25'',3'), (26''',1',25''',3')"),
        "C": _over("((2*k)'',1',(2*k-1)'',3'), (27,(2*k+1)'',27',(2*k)'')", range(1, 13)),
        "D": _over("((2*k)''',1',(2*k-1)''',3'), (27,(2*k+1)''',27',(2*k)''')", range(1, 13)),
        "F": _over("(26'',(2*k+1)',(2*k)''',27'')", range(2, 13)),
        "H": _over("(1''',(2*k)',3''',(2*k-1)'')", range(1, 14)),
        "M": _over("(2''',2*k-1,(2*k)'',27''')", range(1, 14)),
        "N": _over("(2*k-1,1',2*k,1'')", range(1, 14)),
        "R": _over(_R, ODD_1_25),
        "S": parse_paths(_S_EXTRA) + _minus(_over(_S, ODD_1_25), _S_DROP),
        "T": _over(_T1, ODD_1_25) + _over(_T2, ODD_1_25) + _over(_T3, ODD_1_25),
        "U": parse_paths(_U_EXTRA) + _over(_U, range(1, 24, 2)),
        "V": parse_paths(_V_EXTRA) + _minus(_over(_V, range(5, 26, 2)), _V_DROP),
        "W": parse_paths(_W_EXTRA) + _minus(_over(_W, range(5, 26, 2)), _W_DROP),
        "X": _over(_X, ODD_1_25),
        "Y": parse_paths(TABLE_94),
    }
    return {key: tuple(tuple(p) for p in val) for key, val in fam.items()}


def base_colouring() -> Colouring:
    """Class 0 holds the odd points of each copy and 28; class 1 the even points and the 27s."""
    assignment = {}
    for primes in range(4):
        for k in range(1, 28):
            assignment[point(k, primes)] = 1 if k % 2 == 0 or k == 27 else 0
    assignment[28] = 0
    return Colouring(2, assignment)


def base_patterns() -> tuple[Pattern, ...]:
    """Non-critical blocks the growth steps start from, oriented by role."""
    w2b4_r1 = Pattern("W2B4", tuple(parse_paths("(25',1,6',2), (2,2',1,27')")), 0)
    w2b4_r3 = Pattern("W2B4", tuple(parse_paths("(25',3,6',4), (4,2',3,27')")), 0)
    w1b3_r1 = Pattern("W1B3", tuple(parse_paths("(2,2',1,27')")), 0)
    return (w2b4_r1, w2b4_r3, w1b3_r1)


def build_unique_109() -> ExtensionContext:
    blocks = [p for fam in families().values() for p in fam]
    system = PathSystem(4, range(1, ORDER + 1), blocks)
    return ExtensionContext(system, base_colouring(), base_patterns())
