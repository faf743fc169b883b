"""Small explicit P4 decompositions used as building blocks by the larger constructions.

Every gadget is written on symbolic points ``v1..vp`` (left side) and
``w1..wq`` (right side) together with its published red/yellow split.  Red
maps to colour 0 and yellow to colour 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import Colouring, GraphSpec, InvalidRelabelling, PathBlock, relabel


class ArityMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Gadget:
    tag: str
    left: int
    right: int
    graph: str  # "complete", "bipartite" or "bipartite_plus_clique"
    blocks: tuple[tuple[str, ...], ...]
    red: frozenset[str]
    strong: bool


def _gadget(tag, left, right, graph, blocks, red, strong):
    parsed = tuple(tuple(b.split()) for b in blocks.split(";"))
    return Gadget(tag, left, right, graph, parsed, frozenset(red.split()), strong)


_TABLE = [
    _gadget("Sys4", 4, 0, "complete",
            "v3 v1 v2 v4; v1 v4 v3 v2",
            "v1 v3", True),
    _gadget("Sys6", 6, 0, "complete",
            "v6 v1 v2 v5; v6 v2 v3 v5; v2 v4 v1 v3; v4 v3 v6 v5; v1 v5 v4 v6",
            "v1 v3 v5", True),
    _gadget("Sys7", 7, 0, "complete",
            "v2 v7 v4 v3; v7 v3 v6 v5; v1 v7 v6 v2; v2 v4 v1 v3; v1 v5 v4 v6;"
            "v2 v3 v5 v7; v6 v1 v2 v5",
            "v1 v3 v5 v7", False),
    _gadget("K33", 3, 3, "bipartite",
            "v2 w1 v1 w3; v1 w2 v3 w1; v3 w3 v2 w2",
            "v1 v3 w2", True),
    _gadget("K43", 4, 3, "bipartite",
            "v4 w3 v1 w1; v2 w1 v4 w2; v1 w2 v3 w1; v3 w3 v2 w2",
            "v1 v3 w1 w3", False),
    _gadget("K73", 7, 3, "bipartite",
            "v1 w1 v7 w3; v7 w2 v2 w1; v2 w3 v3 w1; v3 w2 v4 w1; v4 w3 v5 w1;"
            "v5 w2 v6 w1; v6 w3 v1 w2",
            "v1 v3 v5 v7 w2", True),
    _gadget("K62", 6, 2, "bipartite",
            "w1 v1 w2 v2; v2 w1 v3 w2; w1 v4 w2 v5; v5 w1 v6 w2",
            "v1 v3 v5 w1", True),
    _gadget("K63", 6, 3, "bipartite",
            "v1 w1 v2 w2; v2 w3 v3 w1; v3 w2 v4 w1; v4 w3 v5 w1; v5 w2 v6 w1;"
            "v6 w3 v1 w2",
            "v1 v3 v5 w1 w3", False),
    _gadget("K64", 6, 4, "bipartite",
            "v1 w1 v2 w2; v1 w3 v2 w4; v1 w2 v3 w1; v1 w4 v3 w3; v4 w1 v5 w2;"
            "v4 w3 v5 w4; v4 w2 v6 w1; v4 w4 v6 w3",
            "v1 v3 v5 w1 w3", True),
    _gadget("K65", 6, 5, "bipartite",
            "v1 w1 v2 w2; v2 w3 v3 w1; v3 w2 v4 w1; v4 w3 v5 w1; v5 w2 v6 w1;"
            "v6 w3 v1 w2; v2 w4 v3 w5; v2 w5 v4 w4; v5 w4 v6 w5; v5 w5 v1 w4",
            "v1 v3 v5 w1 w3 w5", False),
    _gadget("K66", 6, 6, "bipartite",
            "v1 w1 v2 w2; v2 w3 v3 w1; v3 w2 v4 w1; v4 w3 v5 w1; v5 w2 v6 w1;"
            "v6 w3 v1 w2; v1 w4 v2 w5; v2 w6 v3 w4; v3 w5 v4 w4; v4 w6 v5 w4;"
            "v5 w5 v6 w4; v6 w6 v1 w5",
            "v1 v3 v5 w1 w3 w5", True),
    _gadget("K67", 6, 7, "bipartite",
            "v1 w1 v2 w2; v2 w3 v3 w1; v3 w2 v4 w1; v4 w3 v5 w1; v5 w2 v6 w1;"
            "v6 w3 v1 w2; v1 w4 v2 w5; v1 w6 v2 w7; v1 w5 v3 w4; v1 w7 v3 w6;"
            "v4 w4 v5 w5; v4 w6 v5 w7; v4 w5 v6 w4; v4 w7 v6 w6",
            "v1 v3 v5 w1 w3 w5 w7", False),
    _gadget("K63plusK3", 6, 3, "bipartite_plus_clique",
            "v1 w1 w2 w3; w2 v2 w1 w3; v2 w3 v3 w1; v3 w2 v4 w1; v4 w3 v5 w1;"
            "v5 w2 v6 w1; v6 w3 v1 w2",
            "v1 v3 v5 w1 w3", False),
    _gadget("K72plusK2", 7, 2, "bipartite_plus_clique",
            "v2 w1 v3 w2; v2 w2 w1 v4; v4 w2 v5 w1; v6 w1 v7 w2; v6 w2 v1 w1",
            "v1 v3 v5 v7 w1", False),
    _gadget("K73plusK3", 7, 3, "bipartite_plus_clique",
            "v4 w1 v5 w3; v5 w2 v4 w3; v6 w1 v7 w3; v7 w2 v6 w3; v1 w3 v3 w1;"
            "v2 w1 v1 w2; v3 w2 w3 v2; v2 w2 w1 w3",
            "v1 v3 v5 v7 w1", True),
    _gadget("K42plusK2", 4, 2, "bipartite_plus_clique",
            "v1 w1 w2 v4; v4 w1 v2 w2; v1 w2 v3 w1",
            "v1 v3 w1", True),
    _gadget("K45plusK5", 4, 5, "bipartite_plus_clique",
            "v4 w3 v1 w1; v2 w1 v4 w2; v1 w2 v3 w1; v3 w3 v2 w2; v1 w4 w5 v4;"
            "v4 w4 v2 w5; v1 w5 v3 w4; w4 w1 w2 w3; w4 w2 w5 w3; w4 w3 w1 w5",
            "v1 v3 w1 w3 w5", False),
]

GADGETS: dict[str, Gadget] = {g.tag: g for g in _TABLE}
KINDS: tuple[str, ...] = tuple(GADGETS)


def lookup(kind: str) -> Gadget:
    """Resolve a tag case-insensitively (``k66`` and ``K66`` both work)."""
    if kind in GADGETS:
        return GADGETS[kind]
    folded = {k.lower(): g for k, g in GADGETS.items()}
    try:
        return folded[kind.lower()]
    except KeyError:
        raise KeyError(f"unknown ingredient kind {kind!r}; choose from {', '.join(KINDS)}") from None


def build_ingredient(
    kind: str, left_labels: Sequence[int], right_labels: Sequence[int] = ()
) -> tuple[list[PathBlock], GraphSpec, Colouring]:
    """Instantiate a gadget with ``v_i -> left_labels[i-1]`` and ``w_j -> right_labels[j-1]``.

    Returns the relabelled blocks, the graph they decompose, and the published
    2-colouring restricted to the labels.
    """
    g = lookup(kind)
    left, right = list(left_labels), list(right_labels)
    if len(left) != g.left or len(right) != g.right:
        raise ArityMismatch(
            f"{g.tag} takes {g.left} left and {g.right} right labels, got {len(left)} and {len(right)}"
        )
    if len(set(left + right)) != len(left) + len(right):
        raise InvalidRelabelling(f"repeated label in {left + right}")
    mapping = {f"v{i + 1}": x for i, x in enumerate(left)}
    mapping.update({f"w{j + 1}": x for j, x in enumerate(right)})
    blocks = [tuple(mapping[s] for s in b) for b in g.blocks]
    if g.graph == "complete":
        target = GraphSpec.complete(left)
    elif g.graph == "bipartite":
        target = GraphSpec.complete_bipartite(left, right)
    else:
        target = GraphSpec.bipartite_plus_clique(left, right)
    colouring = Colouring(2, {x: 0 if s in g.red else 1 for s, x in mapping.items()})
    return relabel(blocks, {x: x for x in left + right}), target, colouring


def gadget_blocks(kind: str, left_labels: Sequence[int], right_labels: Sequence[int] = ()) -> list[PathBlock]:
    return build_ingredient(kind, left_labels, right_labels)[0]
