"""Equitably 2-chromatic P4 systems, Hamilton path decompositions, and design composition."""

from __future__ import annotations

from collections import Counter
from itertools import combinations
from typing import Iterable, Sequence

from .core import Colouring, PathBlock, PathSystem, canonicalize
from .ingredients import gadget_blocks


class NotAdmissible(ValueError):
    pass


class OddOrder(ValueError):
    pass


class NotADesign(ValueError):
    pass


def is_admissible(n: int, m: int) -> bool:
    if m < 2 or n < 1:
        raise ValueError("need m >= 2 and n >= 1")
    return n == 1 or (n >= m and n * (n - 1) % (2 * (m - 1)) == 0)


def hexads(first: int, count: int) -> list[list[int]]:
    return [list(range(first + 6 * i, first + 6 * i + 6)) for i in range(count)]


def parity_colouring(n: int) -> Colouring:
    """Odd labels in class 0, even labels in class 1."""
    return Colouring(2, {v: (v + 1) % 2 for v in range(1, n + 1)})


def _order_6t(t: int) -> list[PathBlock]:
    parts = hexads(1, t)
    blocks: list[PathBlock] = []
    for part in parts:
        blocks += gadget_blocks("Sys6", part)
    for a, b in combinations(parts, 2):
        blocks += gadget_blocks("K66", a, b)
    return blocks


def _order_6t_plus_1(t: int) -> list[PathBlock]:
    heptad = list(range(1, 8))
    parts = hexads(8, t - 1)
    blocks = gadget_blocks("Sys7", heptad)
    for part in parts:
        blocks += gadget_blocks("Sys6", part)
        blocks += gadget_blocks("K67", part, heptad)
    for a, b in combinations(parts, 2):
        blocks += gadget_blocks("K66", a, b)
    return blocks


def _new_points_block_list(t: int) -> list[tuple[int, ...]]:
    """The explicit ten paths joining the first hexad to four new points."""
    p1, p2, p3, p4 = (6 * t + i for i in range(1, 5))
    return [
        (1, p1, p2, 2), (1, p3, p2, p4), (p4, 2, p3, p1), (2, p1, p4, p3),
        (1, p2, 3, p1), (1, p4, 3, p3), (4, p1, 5, p2), (4, p3, 5, p4),
        (4, p2, 6, p1), (4, p4, 6, p3),
    ]


def build_2chromatic(n: int) -> tuple[PathSystem, Colouring]:
    """Equitably 2-coloured P4 system of order ``n`` (strongly equitable for n = 0, 4 mod 6)."""
    if n < 4 or not is_admissible(n, 4):
        raise NotAdmissible(f"no P4 system of order {n}")
    t, r = divmod(n, 6)
    if n in (4, 6, 7):
        kind = {4: "Sys4", 6: "Sys6", 7: "Sys7"}[n]
        blocks = gadget_blocks(kind, range(1, n + 1))
    elif r == 0:
        blocks = _order_6t(t)
    elif r == 1:
        blocks = _order_6t_plus_1(t)
    elif r == 3:
        new = [6 * t + 1, 6 * t + 2, 6 * t + 3]
        parts = hexads(1, t)
        blocks = _order_6t(t) + gadget_blocks("K63plusK3", parts[0], new)
        for part in parts[1:]:
            blocks += gadget_blocks("K63", part, new)
    else:
        new = [6 * t + 1, 6 * t + 2, 6 * t + 3, 6 * t + 4]
        parts = hexads(1, t)
        blocks = _order_6t(t) + [canonicalize(b) for b in _new_points_block_list(t)]
        for part in parts[1:]:
            blocks += gadget_blocks("K64", part, new)
    return PathSystem(4, range(1, n + 1), blocks), parity_colouring(n)


def hamilton_path_decomposition(n: int) -> list[PathBlock]:
    """Split K_n (n even) into n/2 Hamilton paths on labels 1..n.

    Uses the zig-zag Hamilton cycles of K_{n+1} around a hub; dropping the hub
    leaves the path i, i+1, i-1, i+2, i-2, ... (indices mod n).
    """
    if n < 2 or n % 2:
        raise OddOrder(f"Hamilton path decomposition needs an even order, got {n}")
    paths = []
    for i in range(n // 2):
        seq = [i]
        for j in range(1, n // 2 + 1):
            seq.append((i + j) % n)
            if len(seq) < n:
                seq.append((i - j) % n)
        paths.append(canonicalize([x + 1 for x in seq]))
    return paths


def compose_design(design_blocks: Iterable[Iterable[int]], n: int) -> PathSystem:
    """Replace each clique of a (n, 2t, 1)-design by a Hamilton path decomposition.

    The result is a P_{2t} system of order ``n`` in which every path lives
    inside a single design block.
    """
    blocks = [sorted(set(b)) for b in design_blocks]
    if not blocks:
        raise NotADesign("empty design")
    size = len(blocks[0])
    if size < 2 or size % 2 or any(len(b) != size for b in blocks):
        raise NotADesign("design blocks must all have the same even size")
    points = set(range(1, n + 1))
    cover: Counter = Counter()
    for b in blocks:
        if not points.issuperset(b):
            raise NotADesign(f"block {b} uses points outside 1..{n}")
        cover.update(combinations(b, 2))
    for pair in combinations(sorted(points), 2):
        if cover[pair] != 1:
            raise NotADesign(f"pair {pair} is covered {cover[pair]} times")
    base = hamilton_path_decomposition(size)
    paths: list[PathBlock] = []
    for b in blocks:
        paths += [canonicalize([b[x - 1] for x in p]) for p in base]
    return PathSystem(size, points, paths)


def parse_design(lines: Sequence[str]) -> tuple[int, list[list[int]]]:
    """Read a ``DESIGN 1 <n> <block size> <count>`` file body."""
    rows = [ln.split() for ln in lines if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows or rows[0][:2] != ["DESIGN", "1"] or len(rows[0]) != 5:
        raise ValueError("expected header 'DESIGN 1 <n> <block size> <count>'")
    n, size, count = (int(x) for x in rows[0][2:])
    body = [[int(x) for x in r] for r in rows[1:]]
    if len(body) != count or any(len(r) != size for r in body):
        raise ValueError("design body does not match its header")
    return n, body
