"""Growth steps for uniquely 2-chromatic P4 systems.

Each step removes one registered non-critical pattern (a path or a pair of
paths with a known colour template), adds new points whose colours are forced
through the remaining blocks, and reuses the freed edges.  In every step "w"
means the pattern's colour and "b" the other class.
"""

from __future__ import annotations

from typing import Sequence

from ..core import PATTERN_SHAPES, Colouring, ExtensionContext, Pattern, PathBlock, PathSystem, relabel
from ..ingredients import gadget_blocks
from ..solver import SearchBudget, is_uniquely_2chromatic


class NotSupported(ValueError):
    pass


class PatternUnavailable(ValueError):
    pass


class GuardFailed(ValueError):
    pass


class CriticalPattern(GuardFailed):
    """The solver could not confirm that removing the pattern keeps the colouring unique."""


LEMMAS = ("plus2", "plus3", "plus5", "plus6_w2b4", "plus6_w3b3")
STEP = {"plus2": 2, "plus3": 3, "plus5": 5, "plus6_w2b4": 6, "plus6_w3b3": 6}
PATTERN_KIND = {"plus2": "W1B3", "plus3": "W1B3", "plus5": "W2B4", "plus6_w2b4": "W2B4", "plus6_w3b3": "W3B3"}

# Role names of the pattern vertices, in path order.
_ROLES = {
    "W3B3": (("a6", "a2", "a3", "a5"), ("a2", "a4", "a1", "a3")),
    "W2B4": (("a1", "a2", "b1", "b2"), ("b2", "b3", "a2", "b4")),
    "W1B3": (("b1", "b2", "a1", "b3"),),
}

_PLUS6_W3B3 = """
a1 v4 a3 a5; v4 a4 v5 a8; v4 a10 v3 a12; a4 a2 v1 a6; a5 v1 a7 v6; v2 a9 v1 a11;
a2 a3 a1 v5; a1 v6 a3 v5; a1 v1 a3 v2; a3 v3 a1 v2;
a5 v4 a7 v5; v5 a5 v2 a7; v6 a5 v3 a7;
a9 v3 a11 v2; a9 v4 a11 v5; a11 v6 a9 v5;
v4 a2 a6 v5; v5 a2 v2 a6; a1 a4 v6 a8; v1 a4 v2 a8; v1 a8 v3 a4; v3 a6 v4 a8; v3 a2 v6 a6;
v4 a12 v5 a10; a10 v6 a12 v1; v1 a10 v2 a12
"""

_PLUS5 = """
a2 a1 v1 a3; b3 b2 v4 b1; v4 a4 v5 a5; v2 b3 v1 b4; a2 v4 a6 v3;
v1 a5 v4 a1; v2 a5 v3 a1; a1 v2 a3 v3; a1 v5 a3 v4;
b3 a2 v1 a4; b4 a2 v2 a6; v1 a6 v5 a2; v2 a4 v3 a2;
a2 b1 b2 v1; v2 b1 v3 a7; a7 v1 b1 v5; v3 b2 v5 a7; b2 v2 a7 v4;
v1 a8 v5 b4; b3 v3 a8 v4; b4 v4 b3 v5; a8 v2 b4 v3;
v1 a9 v5 b6; b5 v3 a9 v4; v5 b5 v4 b6; a9 v2 b6 v3; b6 v1 b5 v2
"""
_PLUS5_TRIPLE = "x1 v1 x2 v2; x1 v2 x3 v5; v3 x1 v4 x3; v1 x3 v3 x2; x1 v5 x2 v4"

_PLUS6_W2B4 = """
a1 a2 v1 a3; v1 b3 v2 b4; v1 b5 v6 b6; b3 b2 v4 b1; v4 a1 v5 a4; v4 a5 v3 a6;
b4 a2 v2 a3; b3 a2 v6 a3; a2 v4 a3 v3; v3 a2 v5 a3;
v1 a1 v2 a4; v1 a4 v6 a1; v4 a4 v3 a1;
v1 a5 v2 a6; v1 a6 v6 a5; v4 a6 v5 a5;
a2 b1 b2 v1; b2 v2 b1 v1; v6 b2 v5 b1; v6 b1 v3 b2;
v1 b4 v6 b3; b4 v3 b3 v4; v4 b4 v5 b3;
v1 b6 v2 b5; b6 v3 b5 v4; b5 v5 b6 v4
"""

_PLUS2 = "b2 b1 v1 b3; v1 a1 v2 a2; a1 b2 v1 v2; a1 b3 v2 b2; a2 v1 a3 v2; b1 v2 b4 v1"
_PLUS2_TRIPLE = "x1 v1 x2 v2; x1 v2 x3 v1"

# The first path of the second line is printed with a stray brace in the source; read as (a1,b3,v2,v1).
_PLUS3 = """
b2 b1 v1 b3; v1 a1 v2 a2; v2 b2 v3 b3;
a1 b3 v2 v1; b2 a1 v3 v2; b1 v3 a2 v1; b1 v2 a3 v1; a3 v3 v1 b2
"""
_PLUS3_PAIR = "x1 v3 x2 v2; v2 x1 v1 x2"
_PLUS3_TRIPLE = "v1 x1 v2 x2; x3 v1 x2 v3; x1 v3 x3 v2"


def _paths(text: str) -> list[tuple[str, ...]]:
    return [tuple(p.split()) for p in text.replace("\n", " ").split(";") if p.strip()]


def _bind(text: str, names: dict[str, int]) -> list[PathBlock]:
    return relabel([tuple(names[s] for s in p) for p in _paths(text)], {x: x for x in names.values()})


def _smallest(pool: Sequence[int], count: int, what: str) -> list[int]:
    if len(pool) < count:
        raise GuardFailed(f"GUARD need {count} spare {what} points, found {len(pool)}")
    return list(pool[:count])


def _pairs_and_triple(points: Sequence[int]) -> tuple[list[list[int]], list[int] | None]:
    """Consecutive pairs in label order; with an odd count the last three labels form a triple."""
    pts = sorted(points)
    if len(pts) % 2 == 0:
        return [pts[i:i + 2] for i in range(0, len(pts), 2)], None
    if len(pts) < 3:
        raise GuardFailed("GUARD leftover points cannot be split into pairs and one triple")
    return [pts[i:i + 2] for i in range(0, len(pts) - 3, 2)], pts[-3:]


def _hexad_leftovers(vs: list[int], leftover: Sequence[int]) -> list[PathBlock]:
    pairs, triple = _pairs_and_triple(leftover)
    blocks: list[PathBlock] = []
    for pair in pairs:
        blocks += gadget_blocks("K62", vs, pair)
    if triple:
        blocks += gadget_blocks("K63", vs, triple)
    return blocks


def _next_pattern(vs: list[int], colour: int) -> Pattern:
    v1, v2, v3, v4, v5, v6 = vs
    return Pattern("W3B3", ((v6, v2, v3, v5), (v2, v4, v1, v3)), colour)


def _check_residue(lemma: str, n: int, allowed: tuple[int, ...]) -> None:
    if n % 6 not in allowed:
        res = ", ".join(str(r) for r in allowed)
        raise GuardFailed(f"GUARD n = {res} (mod 6) failed for {lemma}: n = {n}")


def find_patterns(system: PathSystem, colouring: Colouring, kind: str, limit: int = 50) -> list[Pattern]:
    """Blocks of ``system`` realising a pattern template under ``colouring``, in block order."""
    shapes = PATTERN_SHAPES[kind]
    roles = _ROLES[kind]
    by_vertex: dict[int, list[PathBlock]] = {}
    for b in system.blocks:
        for v in b:
            by_vertex.setdefault(v, []).append(b)
    found: list[Pattern] = []

    def extend(idx: int, names: dict[str, int], paths: list[PathBlock], w: int) -> None:
        if len(found) >= limit:
            return
        if idx == len(shapes):
            found.append(Pattern(kind, tuple(paths), w))
            return
        known = [names[r] for r in roles[idx] if r in names]
        pool = by_vertex[known[0]] if known else system.blocks
        for block in pool:
            if block in paths:
                continue
            for path in (block, block[::-1]):
                if any((colouring[v] == w) != (s == "W") for v, s in zip(path, shapes[idx])):
                    continue
                trial = dict(names)
                if all(trial.setdefault(r, v) == v for r, v in zip(roles[idx], path)) and len(
                    set(trial.values())
                ) == len(trial):
                    extend(idx + 1, trial, paths + [path], w)

    for w in range(2):
        extend(0, {}, [], w)
    return found


def certify_noncritical(ctx: ExtensionContext, pattern: Pattern, budget: SearchBudget | None = None) -> bool | None:
    """Does the system stay uniquely 2-colourable once the pattern's blocks are removed?

    Returns None when the solver runs out of budget.
    """
    drop = pattern.canonical_blocks()
    rest = PathSystem(ctx.system.m, ctx.system.vertices, [b for b in ctx.system.blocks if b not in drop])
    return is_uniquely_2chromatic(rest, budget or SearchBudget()).answer


def extend_unique(
    ctx: ExtensionContext,
    lemma: str,
    certify: bool = False,
    budget: SearchBudget | None = None,
) -> ExtensionContext:
    """Apply one growth step to a uniquely 2-coloured system.

    With ``certify`` set, the solver first confirms that the system minus the
    consumed blocks is still uniquely 2-colourable.
    """
    if lemma not in STEP:
        raise NotSupported(f"unknown growth step {lemma!r}; choose from {', '.join(LEMMAS)}")
    if ctx.system.m != 4 or ctx.system.vertices != frozenset(range(1, ctx.order + 1)):
        raise NotSupported("growth steps expect a P4 system on points 1..n")
    n = ctx.order
    if lemma == "plus6_w3b3":
        _check_residue(lemma, n, (0, 1, 3, 4))
    elif lemma == "plus6_w2b4":
        _check_residue(lemma, n, (1, 3, 4))
    else:
        _check_residue(lemma, n, (1,))
    kind = PATTERN_KIND[lemma]
    available = ctx.patterns(kind)
    if not available:
        raise PatternUnavailable(f"{lemma} needs a registered {kind} pattern; none is available")
    pattern = available[0]
    w = pattern.colour
    col = ctx.colouring
    if lemma == "plus5" and not 3 * len(col.classes()[w]) > n + 15:
        raise GuardFailed("GUARD |C_w| > |P|/3 + 5 failed")

    if certify:
        verdict = certify_noncritical(ctx, pattern, budget)
        if verdict is not True:
            reason = "could not be certified within budget" if verdict is None else "are critical"
            raise CriticalPattern(f"GUARD non-critical pattern failed: the {kind} blocks {reason}")

    names: dict[str, int] = {}
    for path, roles in zip(pattern.paths, _ROLES[kind]):
        names.update(zip(roles, path))
    used = set(names.values())
    spare_w = [v for v in range(1, n + 1) if col[v] == w and v not in used]
    spare_b = [v for v in range(1, n + 1) if col[v] != w and v not in used]
    step = STEP[lemma]
    new = list(range(n + 1, n + step + 1))
    names.update({f"v{i + 1}": v for i, v in enumerate(new)})

    added: list[PathBlock] = []
    registered: list[Pattern] = []
    if lemma == "plus6_w3b3":
        names.update(zip(("a7", "a9", "a11"), _smallest(spare_w, 3, "w")))
        names.update(zip(("a8", "a10", "a12"), _smallest(spare_b, 3, "b")))
        added += _bind(_PLUS6_W3B3, names)
        core = {names[f"a{i}"] for i in range(1, 13)}
        added += _hexad_leftovers(new, [v for v in range(1, n + 1) if v not in core])
        added += gadget_blocks("Sys6", new)
        new_colours = {v: w if i % 2 == 0 else 1 - w for i, v in enumerate(new)}
        registered.append(_next_pattern(new, w))
    elif lemma == "plus6_w2b4":
        for i, v in enumerate(_smallest(spare_w, 4, "w"), start=3):
            names[f"a{i}"] = v
        for i, v in enumerate(_smallest(spare_b, 2, "b"), start=5):
            names[f"b{i}"] = v
        added += _bind(_PLUS6_W2B4, names)
        core = {names[x] for x in ("a1", "a2", "a3", "a4", "a5", "a6", "b1", "b2", "b3", "b4", "b5", "b6")}
        added += _hexad_leftovers(new, [v for v in range(1, n + 1) if v not in core])
        added += gadget_blocks("Sys6", new)
        new_colours = {v: 1 - w if i % 2 == 0 else w for i, v in enumerate(new)}
        registered.append(_next_pattern(new, 1 - w))
    elif lemma == "plus5":
        for i, v in enumerate(_smallest(spare_w, 8, "w"), start=3):
            names[f"a{i}"] = v
        for i, v in enumerate(_smallest(spare_b, 2, "b"), start=5):
            names[f"b{i}"] = v
        added += _bind(_PLUS5, names)
        core = {names[f"a{i}"] for i in range(1, 11)} | {names[f"b{i}"] for i in range(1, 7)}
        rest = [v for v in range(1, n + 1) if v not in core]
        middles_pool = [v for v in rest if col[v] == w]
        m = len(rest) // 3
        if len(rest) % 3 or len(middles_pool) < m:
            raise GuardFailed("GUARD |C_w| > |P|/3 + 5 failed")
        middles = middles_pool[:m]
        others = [v for v in rest if v not in set(middles)]
        for i, mid in enumerate(middles):
            trip = {"x1": others[2 * i], "x2": mid, "x3": others[2 * i + 1]}
            added += _bind(_PLUS5_TRIPLE, {**names, **trip})
        hexad = new + [names["a10"]]
        added += gadget_blocks("Sys6", hexad)
        new_colours = {v: 1 - w if i % 2 == 0 else w for i, v in enumerate(new)}
        registered.append(_next_pattern(hexad, 1 - w))
    elif lemma == "plus2":
        for i, v in enumerate(_smallest(spare_w, 2, "w"), start=2):
            names[f"a{i}"] = v
        names["b4"] = _smallest(spare_b, 1, "b")[0]
        added += _bind(_PLUS2, names)
        core = {names[x] for x in ("a1", "a2", "a3", "b1", "b2", "b3", "b4")}
        rest = [v for v in range(1, n + 1) if v not in core]
        for i in range(0, len(rest), 3):
            added += _bind(_PLUS2_TRIPLE, {**names, "x1": rest[i], "x2": rest[i + 1], "x3": rest[i + 2]})
        new_colours = {new[0]: w, new[1]: 1 - w}
    else:
        for i, v in enumerate(_smallest(spare_w, 2, "w"), start=2):
            names[f"a{i}"] = v
        added += _bind(_PLUS3, names)
        core = {names[x] for x in ("a1", "a2", "a3", "b1", "b2", "b3")}
        rest = [v for v in range(1, n + 1) if v not in core]
        b_rest = [v for v in rest if col[v] != w]
        if len(rest) % 2 == 0 or not b_rest:
            raise GuardFailed("GUARD leftover points need one triple with a b-coloured middle")
        mid = b_rest[-1]
        others = [v for v in rest if v != mid]
        for i in range(0, len(others) - 2, 2):
            added += _bind(_PLUS3_PAIR, {**names, "x1": others[i], "x2": others[i + 1]})
        added += _bind(_PLUS3_TRIPLE, {**names, "x1": others[-2], "x2": mid, "x3": others[-1]})
        new_colours = {new[0]: w, new[1]: 1 - w, new[2]: w}

    consumed = pattern.canonical_blocks()
    kept = [b for b in ctx.system.blocks if b not in consumed]
    system = PathSystem(4, range(1, n + step + 1), kept + added)
    survivors = [p for p in ctx.noncritical if not (p.canonical_blocks() & consumed)]
    return ExtensionContext(system, col.extended(new_colours), tuple(survivors + registered))


def route(n: int) -> list[str]:
    """Growth steps taking the order-109 base to order ``n``."""
    if n < 109 or n % 3 == 2:
        raise NotSupported(f"uniquely 2-chromatic systems are built for n = 0, 1 (mod 3) with n >= 109, not {n}")
    opening = {1: ["plus6_w2b4"], 0: ["plus5"], 3: ["plus2", "plus6_w2b4"], 4: ["plus3", "plus6_w2b4"]}[n % 6]
    steps: list[str] = []
    order = 109
    while order < n:
        lemma = opening[len(steps)] if len(steps) < len(opening) else "plus6_w3b3"
        steps.append(lemma)
        order += STEP[lemma]
    return steps
