"""Order-28 P4 system in which points 27 and 28 can never share a colour."""

from __future__ import annotations

from dataclasses import dataclass

from ..core import Colouring, PathBlock, PathSystem, canonicalize


@dataclass(frozen=True)
class ForcedPairCertificate:
    system: PathSystem
    u: int
    v: int
    colouring: Colouring


def triple_family(i: int, j: int, l: int) -> list[tuple[int, ...]]:
    return [
        (2 * i - 1, 2 * j, 2 * l, 2 * i),
        (2 * i - 1, 2 * j - 1, 2 * l - 1, 2 * i),
        (2 * i - 1, 2 * l - 1, 2 * j, 2 * i),
        (2 * i - 1, 2 * l, 2 * j - 1, 2 * i),
    ]


def pair_gadget(c: int, d: int, a1: int, a2: int, b1: int, b2: int) -> list[tuple[int, ...]]:
    return [(c, a1, b1, a2), (d, a2, b2, a1)]


# (c, d, a1, a2, b1, b2)
_PAIR_GADGETS = [
    (25, 26, 1, 2, 11, 12), (28, 27, 1, 2, 15, 16), (26, 25, 1, 2, 17, 18), (28, 27, 21, 22, 1, 2),
    (25, 26, 3, 4, 11, 12),
    (26, 25, 3, 4, 23, 24),
    (28, 27, 5, 6, 7, 8), (25, 26, 5, 6, 9, 10), (26, 25, 5, 6, 11, 12), (26, 25, 13, 14, 5, 6),
    (28, 27, 17, 18, 5, 6), (25, 26, 21, 22, 5, 6), (26, 25, 23, 24, 5, 6),
    (28, 27, 7, 8, 15, 16), (25, 26, 7, 8, 21, 22), (26, 25, 7, 8, 23, 24),
    (26, 25, 9, 10, 13, 14), (25, 26, 9, 10, 17, 18),
    (28, 27, 11, 12, 15, 16), (25, 26, 11, 12, 17, 18), (26, 25, 11, 12, 19, 20), (25, 26, 23, 24, 11, 12),
    (25, 26, 13, 14, 23, 24), (28, 27, 15, 16, 23, 24),
    (25, 26, 17, 18, 19, 20), (26, 25, 21, 22, 17, 18), (26, 25, 17, 18, 23, 24),
]


def forced28_families() -> dict[str, list[tuple[int, ...]]]:
    """The seven block families, oriented as written in the construction."""
    fam: dict[str, list[tuple[int, ...]]] = {}
    fam["B1"] = [(27, 2 * i - 1, 2 * i, 28) for i in range(1, 13)]
    fam["B2"] = [b for ijl in [(1, 2, 3), (4, 5, 6), (7, 8, 9), (10, 11, 12)] for b in triple_family(*ijl)]
    fam["B3"] = [(7, 1, 13, 20), (1, 19, 14, 7), (7, 2, 14, 20), (2, 20, 7, 13),
                 (13, 8, 1, 20), (2, 8, 19, 13), (1, 14, 8, 20), (7, 19, 2, 13)]
    fam["B4"] = [b for ijl in [(2, 4, 9), (5, 1, 12), (8, 3, 10), (11, 6, 7)] for b in triple_family(*ijl)]
    fam["B5"] = [(9, 3, 15, 22), (3, 21, 16, 9), (9, 4, 16, 22), (4, 22, 9, 15),
                 (15, 10, 3, 22), (4, 10, 21, 15), (3, 16, 10, 22), (9, 21, 4, 15)]
    fam["B6"] = [b for g in _PAIR_GADGETS for b in pair_gadget(*g)]
    fam["B7"] = [(15, 25, 26, 16), (15, 26, 19, 25), (16, 25, 20, 26), (28, 26, 27, 14),
                 (13, 28, 25, 27), (23, 28, 27, 24), (14, 3, 28, 19), (13, 4, 19, 10),
                 (14, 4, 20, 27), (3, 19, 9, 28), (4, 27, 10, 20), (13, 3, 20, 9)]
    return fam


def forced28_blocks() -> list[PathBlock]:
    return [canonicalize(b) for fam in forced28_families().values() for b in fam]


def build_forced_pair_28() -> ForcedPairCertificate:
    system = PathSystem(4, range(1, 29), forced28_blocks())
    colouring = Colouring(2, {v: (v + 1) % 2 for v in range(1, 29)})
    return ForcedPairCertificate(system, 27, 28, colouring)
