"""Growth steps that carry a k-coloured P4 system to larger orders, and the routing between them.

Each step keeps every input block, adds gadgets on the new points, and
extends the colouring by placing new points into the first few classes.
Because the input is a subsystem of the output, any (k-1)-colouring of the
output would restrict to one of the input, so chromatic number is preserved.
"""

from __future__ import annotations

from collections import deque

from .builder import NotAdmissible, hexads, is_admissible
from .core import Colouring, PathBlock, PathSystem
from .ingredients import gadget_blocks


class WrongResidue(ValueError):
    pass


class UnsupportedK(ValueError):
    pass


class Unreachable(ValueError):
    pass


STEPS: dict[int, tuple[int, ...]] = {0: (3, 4, 6, 7), 1: (2, 3, 5, 6), 3: (3, 4, 6, 7), 4: (2, 3, 5, 6)}


def _from_6t(t: int, step: int):
    parts = hexads(1, t)
    base = 6 * t
    new = [base + i for i in range(1, step + 1)]
    blocks: list[PathBlock] = []
    if step == 3:
        blocks += gadget_blocks("K63plusK3", parts[0], new)
        for p in parts[1:]:
            blocks += gadget_blocks("K63", p, new)
        classes = {0: [new[0]], 1: [new[1]], 2: [new[2]]}
    elif step == 4:
        blocks += gadget_blocks("Sys4", new)
        for p in parts:
            blocks += gadget_blocks("K64", p, new)
        classes = {0: [new[0], new[2]], 1: [new[1], new[3]]}
    elif step == 6:
        blocks += gadget_blocks("Sys6", new)
        for p in parts:
            blocks += gadget_blocks("K66", p, new)
        classes = {0: new[0::2], 1: new[1::2]}
    else:
        blocks += gadget_blocks("Sys7", new)
        for p in parts:
            blocks += gadget_blocks("K67", p, new)
        classes = {0: [new[0], new[4], new[6]], 1: [new[1], new[3], new[5]], 2: [new[2]]}
    return blocks, classes


def _from_6t_plus_1(t: int, step: int):
    parts = hexads(1, t - 1)
    last = list(range(6 * t - 5, 6 * t + 2))
    base = 6 * t + 1
    new = [base + i for i in range(1, step + 1)]
    blocks: list[PathBlock] = []
    if step == 2:
        blocks += gadget_blocks("K72plusK2", last, new)
        for p in parts:
            blocks += gadget_blocks("K62", p, new)
        classes = {0: [new[0]], 1: [new[1]]}
    elif step == 3:
        blocks += gadget_blocks("K73plusK3", last, new)
        for p in parts:
            blocks += gadget_blocks("K63", p, new)
        classes = {0: [new[0]], 1: [new[1]], 2: [new[2]]}
    elif step == 5:
        f1, f2 = new[:2], new[2:]
        blocks += gadget_blocks("K72plusK2", last, f1)
        blocks += gadget_blocks("K73plusK3", last, f2)
        for p in parts:
            blocks += gadget_blocks("K62", p, f1)
            blocks += gadget_blocks("K63", p, f2)
        a, b = f1
        c, d, e = f2
        blocks += [(c, a, d, b), (c, b, e, a)]
        classes = {0: [a, d], 1: [b, e], 2: [c]}
    else:
        blocks += gadget_blocks("Sys6", new)
        for p in parts:
            blocks += gadget_blocks("K66", p, new)
        blocks += gadget_blocks("K67", new, last)
        classes = {0: [new[0], new[4]], 1: [new[1], new[3]], 2: [new[2], new[5]]}
    return blocks, classes


def _from_6t_plus_3(t: int, step: int):
    parts = hexads(1, t)
    tail = [6 * t + 1, 6 * t + 2, 6 * t + 3]
    base = 6 * t + 3
    new = [base + i for i in range(1, step + 1)]
    blocks: list[PathBlock] = []
    if step == 3:
        blocks += gadget_blocks("K63plusK3", parts[0], new)
        for p in parts[1:]:
            blocks += gadget_blocks("K63", p, new)
        blocks += gadget_blocks("K33", tail, new)
        classes = {0: [new[0]], 1: [new[1]], 2: [new[2]]}
    elif step == 4:
        blocks += gadget_blocks("Sys4", new)
        swapped = [new[0], new[2], new[1], new[3]]
        for p in parts:
            blocks += gadget_blocks("K64", p, swapped)
        blocks += gadget_blocks("K43", new, tail)
        classes = {0: [new[0], new[1]], 1: [new[2], new[3]]}
    elif step == 6:
        blocks += gadget_blocks("Sys6", new)
        for p in parts:
            blocks += gadget_blocks("K66", p, new)
        blocks += gadget_blocks("K63", new, tail)
        classes = {0: new[0::2], 1: new[1::2]}
    else:
        blocks += gadget_blocks("Sys7", new)
        for p in parts:
            blocks += gadget_blocks("K67", p, new)
        blocks += gadget_blocks("K73", new, tail)
        classes = {0: [new[0], new[4]], 1: [new[1], new[3], new[5]], 2: [new[2], new[6]]}
    return blocks, classes


def _from_6t_plus_4(t: int, step: int):
    parts = hexads(1, t)
    tail = [6 * t + 1, 6 * t + 2, 6 * t + 3, 6 * t + 4]
    base = 6 * t + 4
    new = [base + i for i in range(1, step + 1)]
    blocks: list[PathBlock] = []
    if step == 2:
        for p in parts:
            blocks += gadget_blocks("K62", p, new)
        blocks += gadget_blocks("K42plusK2", tail, new)
        classes = {0: [new[0]], 1: [new[1]]}
    elif step == 3:
        blocks += gadget_blocks("K63plusK3", parts[0], new)
        for p in parts[1:]:
            blocks += gadget_blocks("K63", p, new)
        blocks += gadget_blocks("K43", tail, new)
        classes = {0: [new[0]], 1: [new[1]], 2: [new[2]]}
    elif step == 5:
        for p in parts:
            blocks += gadget_blocks("K65", p, new)
        blocks += gadget_blocks("K45plusK5", tail, new)
        classes = {0: [new[0], new[3]], 1: [new[1], new[4]], 2: [new[2]]}
    else:
        blocks += gadget_blocks("Sys6", new)
        for p in parts:
            blocks += gadget_blocks("K66", p, new)
        # K_{4,6}: the six new points take the v side of the K_{6,4} gadget
        blocks += gadget_blocks("K64", new, tail)
        classes = {0: [new[0], new[4]], 1: [new[1], new[3]], 2: [new[2], new[5]]}
    return blocks, classes


_BUILDERS = {0: _from_6t, 1: _from_6t_plus_1, 3: _from_6t_plus_3, 4: _from_6t_plus_4}


def extend_k_chromatic(system: PathSystem, colouring: Colouring, step: int) -> tuple[PathSystem, Colouring]:
    """Grow a complete k-coloured P4 system (k >= 3) by ``step`` new points.

    ``step`` must be one of ``STEPS[order % 6]``.  The input blocks are kept
    verbatim; new point ``order + i`` gets the class the construction assigns it.
    """
    n = system.order
    if system.m != 4 or set(system.vertices) != set(range(1, n + 1)):
        raise ValueError("expected a P4 system on points 1..n")
    if not system.is_complete():
        raise ValueError("input system is not complete")
    if colouring.k < 3:
        raise UnsupportedK(f"these steps assume at least three colour classes, got k={colouring.k}")
    if colouring.vertices != system.vertices:
        raise ValueError("colouring must cover exactly the system's points")
    t, r = divmod(n, 6)
    if r not in STEPS or t < 1:
        raise WrongResidue(f"order {n} is not 0, 1, 3 or 4 mod 6 with at least one hexad")
    if step not in STEPS[r]:
        raise WrongResidue(f"order {n} = {r} mod 6 admits steps {STEPS[r]}, not +{step}")
    added, classes = _BUILDERS[r](t, step)
    out = PathSystem(4, range(1, n + step + 1), list(system.blocks) + list(added))
    additions = {v: c for c, vs in classes.items() for v in vs}
    return out, colouring.extended(additions)


def plan_route(start: int, target: int) -> list[int]:
    """Fewest steps from ``start`` to ``target``; among equals, the smallest first step wins."""
    if not is_admissible(target, 4):
        raise NotAdmissible(f"no P4 system of order {target}")
    if target == start:
        return []
    if target < start:
        raise Unreachable(f"cannot shrink a system from {start} to {target}")
    prev: dict[int, tuple[int, int] | None] = {start: None}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        if cur == target:
            break
        for s in STEPS.get(cur % 6, ()):
            nxt = cur + s
            if nxt <= target and nxt not in prev:
                prev[nxt] = (cur, s)
                queue.append(nxt)
    if target not in prev:
        raise Unreachable(f"order {target} cannot be reached from {start}")
    route = []
    cur = target
    while prev[cur] is not None:
        cur, s = prev[cur]
        route.append(s)
    return route[::-1]


def k_chromatic_pipeline(system: PathSystem, colouring: Colouring, n: int) -> tuple[PathSystem, Colouring]:
    for step in plan_route(system.order, n):
        system, colouring = extend_k_chromatic(system, colouring, step)
    return system, colouring
