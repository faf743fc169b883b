"""Value types shared by every construction: blocks, graph specs, systems, colourings."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping, Sequence

Vertex = int
Edge = tuple[int, int]
PathBlock = tuple[int, ...]


class InvalidBlock(ValueError):
    pass


class InvalidRelabelling(ValueError):
    pass


class InvalidSystem(ValueError):
    pass


def edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def canonicalize(block: Sequence[int]) -> PathBlock:
    """Return the lexicographically smaller of ``block`` and its reversal."""
    seq = tuple(block)
    if len(seq) < 2:
        raise InvalidBlock(f"a path needs at least two vertices: {seq}")
    if len(set(seq)) != len(seq):
        raise InvalidBlock(f"repeated vertex in {seq}")
    for v in seq:
        if not isinstance(v, int) or v < 1:
            raise InvalidBlock(f"vertex labels must be positive integers: {seq}")
    rev = seq[::-1]
    return seq if seq <= rev else rev


def block_edges(block: Sequence[int]) -> list[Edge]:
    """Consecutive pairs of a path, in path order."""
    canonicalize(block)
    return [edge(block[i], block[i + 1]) for i in range(len(block) - 1)]


def relabel(blocks: Iterable[Sequence[int]], mapping: Mapping[int, int]) -> list[PathBlock]:
    """Apply ``mapping`` to every vertex of every block.

    The mapping must be injective on the support of ``blocks``; orientation of
    each block is preserved and the result is canonicalized.
    """
    blocks = [tuple(b) for b in blocks]
    support = sorted({v for b in blocks for v in b})
    try:
        image = [mapping[v] for v in support]
    except KeyError as exc:
        raise InvalidRelabelling(f"vertex {exc.args[0]} has no image") from None
    if len(set(image)) != len(image):
        raise InvalidRelabelling("mapping is not injective on the block support")
    return [canonicalize([mapping[v] for v in b]) for b in blocks]


@dataclass(frozen=True)
class GraphSpec:
    """The edge set a decomposition must cover.

    ``kind`` is ``"complete"`` (only ``left`` is used), ``"bipartite"`` or
    ``"bipartite_plus_clique"`` (bipartite edges plus the clique on ``right``).
    """

    kind: str
    left: frozenset[int]
    right: frozenset[int] = frozenset()

    def __post_init__(self) -> None:
        if self.kind not in ("complete", "bipartite", "bipartite_plus_clique"):
            raise ValueError(f"unknown graph kind {self.kind!r}")
        if self.kind != "complete" and self.left & self.right:
            raise ValueError("bipartition sides must be disjoint")

    @classmethod
    def complete(cls, vertices: Iterable[int]) -> GraphSpec:
        return cls("complete", frozenset(vertices))

    @classmethod
    def complete_bipartite(cls, left: Iterable[int], right: Iterable[int]) -> GraphSpec:
        return cls("bipartite", frozenset(left), frozenset(right))

    @classmethod
    def bipartite_plus_clique(cls, left: Iterable[int], right: Iterable[int]) -> GraphSpec:
        return cls("bipartite_plus_clique", frozenset(left), frozenset(right))

    @property
    def vertices(self) -> frozenset[int]:
        return self.left | self.right

    def edges(self) -> set[Edge]:
        if self.kind == "complete":
            return {edge(u, v) for u, v in combinations(sorted(self.left), 2)}
        out = {edge(u, v) for u in self.left for v in self.right}
        if self.kind == "bipartite_plus_clique":
            out |= {edge(u, v) for u, v in combinations(sorted(self.right), 2)}
        return out

    def edge_count(self) -> int:
        a, b = len(self.left), len(self.right)
        if self.kind == "complete":
            return a * (a - 1) // 2
        if self.kind == "bipartite":
            return a * b
        return a * b + b * (b - 1) // 2


@dataclass(frozen=True)
class PathSystem:
    """A collection of edge-disjoint ``m``-vertex paths on ``vertices``.

    Blocks are stored canonicalized and sorted, so two systems with the same
    paths compare equal regardless of how they were written down.
    """

    m: int
    vertices: frozenset[int]
    blocks: tuple[PathBlock, ...]

    def __init__(self, m: int, vertices: Iterable[int], blocks: Iterable[Sequence[int]]):
        if m < 2:
            raise InvalidSystem(f"path order must be at least 2, got {m}")
        verts = frozenset(vertices)
        listed = [canonicalize(b) for b in blocks]
        canon = sorted(set(listed))
        if len(canon) != len(listed):
            raise InvalidSystem("the same path is listed twice")
        seen: dict[Edge, PathBlock] = {}
        for b in canon:
            if len(b) != m:
                raise InvalidSystem(f"block {b} does not have {m} vertices")
            if not verts.issuperset(b):
                raise InvalidSystem(f"block {b} uses vertices outside the vertex set")
            for e in block_edges(b):
                if e in seen:
                    raise InvalidSystem(f"edge {e} lies in both {seen[e]} and {b}")
                seen[e] = b
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "blocks", tuple(canon))

    @property
    def order(self) -> int:
        return len(self.vertices)

    @cached_property
    def block_set(self) -> frozenset[PathBlock]:
        return frozenset(self.blocks)

    def __contains__(self, block: Sequence[int]) -> bool:
        return canonicalize(block) in self.block_set

    def edges(self) -> set[Edge]:
        return {e for b in self.blocks for e in block_edges(b)}

    def is_complete(self) -> bool:
        n = self.order
        return len(self.blocks) * (self.m - 1) == n * (n - 1) // 2 and (
            self.edges() == GraphSpec.complete(self.vertices).edges()
        )

    def with_blocks(self, blocks: Iterable[Sequence[int]], extra_vertices: Iterable[int] = ()) -> PathSystem:
        return PathSystem(self.m, self.vertices | frozenset(extra_vertices), blocks)


EQUITABILITY_STRONG = "strong"
EQUITABILITY_EQUITABLE = "equitable"
EQUITABILITY_NEITHER = "neither"


@dataclass(frozen=True)
class Colouring:
    """Total map from vertices to colour classes ``0..k-1``."""

    k: int
    assignment: Mapping[int, int] = field(compare=False)
    _key: tuple[tuple[int, int], ...] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("a colouring needs at least one class")
        items = tuple(sorted(self.assignment.items()))
        for v, c in items:
            if not 0 <= c < self.k:
                raise ValueError(f"vertex {v} has class {c} outside 0..{self.k - 1}")
        object.__setattr__(self, "assignment", dict(items))
        object.__setattr__(self, "_key", items)

    @classmethod
    def from_classes(cls, classes: Sequence[Iterable[int]]) -> Colouring:
        assignment: dict[int, int] = {}
        for c, members in enumerate(classes):
            for v in members:
                if v in assignment:
                    raise ValueError(f"vertex {v} appears in two classes")
                assignment[v] = c
        return cls(len(classes), assignment)

    def __getitem__(self, v: int) -> int:
        return self.assignment[v]

    def __contains__(self, v: int) -> bool:
        return v in self.assignment

    def __hash__(self) -> int:
        return hash((self.k, self._key))

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.assignment)

    def classes(self) -> list[frozenset[int]]:
        out: list[set[int]] = [set() for _ in range(self.k)]
        for v, c in self.assignment.items():
            out[c].add(v)
        return [frozenset(s) for s in out]

    def class_sizes(self) -> list[int]:
        sizes = [0] * self.k
        for c in self.assignment.values():
            sizes[c] += 1
        return sizes

    def equitability(self) -> str:
        sizes = self.class_sizes()
        spread = max(sizes) - min(sizes)
        if spread == 0:
            return EQUITABILITY_STRONG
        if spread == 1:
            return EQUITABILITY_EQUITABLE
        return EQUITABILITY_NEITHER

    def extended(self, additions: Mapping[int, int], k: int | None = None) -> Colouring:
        clash = set(additions) & set(self.assignment)
        if clash:
            raise ValueError(f"vertices already coloured: {sorted(clash)}")
        return Colouring(self.k if k is None else k, {**self.assignment, **additions})

    def restricted(self, vertices: Iterable[int]) -> Colouring:
        return Colouring(self.k, {v: self.assignment[v] for v in vertices})

    def swapped(self) -> Colouring:
        """Exchange classes 0 and 1 of a 2-colouring."""
        if self.k != 2:
            raise ValueError("swap is defined for 2-colourings only")
        return Colouring(2, {v: 1 - c for v, c in self.assignment.items()})

    def relabelled(self, mapping: Mapping[int, int]) -> Colouring:
        return Colouring(self.k, {mapping[v]: c for v, c in self.assignment.items()})


# Shapes of non-critical blocks that the growth steps know how to consume.
# Each instance stores its blocks oriented so that positions carry roles:
#   W3B3: (a6, a2, a3, a5), (a2, a4, a1, a3)   a1, a3, a5 in the pattern class
#   W2B4: (a1, a2, b1, b2), (b2, b3, a2, b4)   a1, a2 in the pattern class
#   W1B3: (b1, b2, a1, b3)                     a1 in the pattern class
PATTERN_SHAPES: dict[str, tuple[str, ...]] = {
    "W3B3": ("BBWW", "BBWW"),
    "W2B4": ("WWBB", "BBWB"),
    "W1B3": ("BBWB",),
}


@dataclass(frozen=True)
class Pattern:
    kind: str
    paths: tuple[PathBlock, ...]
    colour: int  # the class playing "w" in the pattern

    def __post_init__(self) -> None:
        if self.kind not in PATTERN_SHAPES:
            raise ValueError(f"unknown pattern kind {self.kind!r}")
        if len(self.paths) != len(PATTERN_SHAPES[self.kind]):
            raise ValueError(f"{self.kind} needs {len(PATTERN_SHAPES[self.kind])} paths")

    def matches(self, colouring: Colouring) -> bool:
        for path, shape in zip(self.paths, PATTERN_SHAPES[self.kind]):
            for v, letter in zip(path, shape):
                want_w = letter == "W"
                if (colouring[v] == self.colour) != want_w:
                    return False
        return True

    def canonical_blocks(self) -> frozenset[PathBlock]:
        return frozenset(canonicalize(p) for p in self.paths)


@dataclass(frozen=True)
class ExtensionContext:
    """A 2-coloured system together with the non-critical blocks it offers for growth."""

    system: PathSystem
    colouring: Colouring
    noncritical: tuple[Pattern, ...] = ()

    def __post_init__(self) -> None:
        if self.colouring.k != 2:
            raise ValueError("extension contexts carry 2-colourings")
        if self.colouring.vertices != self.system.vertices:
            raise ValueError("colouring does not cover exactly the system's vertices")
        for pat in self.noncritical:
            missing = pat.canonical_blocks() - self.system.block_set
            if missing:
                raise ValueError(f"registered block {sorted(missing)[0]} is not in the system")
            if not pat.matches(self.colouring):
                raise ValueError(f"registered {pat.kind} blocks do not realise their colour pattern")

    @property
    def order(self) -> int:
        return self.system.order

    def patterns(self, kind: str) -> list[Pattern]:
        return [p for p in self.noncritical if p.kind == kind]
