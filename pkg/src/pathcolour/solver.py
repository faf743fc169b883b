"""Verification and colouring search for path systems.

The search engine treats each block as a not-all-equal constraint over its
vertices.  Domains are bitmasks; whenever all but one vertex of a block carry
the same colour, that colour is struck from the last vertex's domain (for two
colours this is ordinary unit propagation).
"""

from __future__ import annotations

import random
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .core import Colouring, GraphSpec, PathBlock, PathSystem, block_edges, canonicalize, edge

MISSING_EDGE = "MISSING_EDGE"
DUPLICATE_EDGE = "DUPLICATE_EDGE"
STRAY_EDGE = "STRAY_EDGE"
MONOCHROMATIC_BLOCK = "MONOCHROMATIC_BLOCK"
UNASSIGNED_VERTEX = "UNASSIGNED_VERTEX"


class NotApplicable(ValueError):
    pass


class InvalidK(ValueError):
    pass


class BudgetExhausted(RuntimeError):
    def __init__(self, nodes: int):
        super().__init__(f"search budget exhausted after {nodes} nodes")
        self.nodes = nodes


@dataclass(frozen=True)
class Violation:
    kind: str
    detail: tuple[int, ...]

    def __str__(self) -> str:
        return " ".join([self.kind, *map(str, self.detail)])


@dataclass(frozen=True)
class VerifyReport:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def kinds(self) -> Counter:
        return Counter(v.kind for v in self.violations)


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int = 10**7
    max_seconds: float = 60.0

    def __post_init__(self) -> None:
        if self.max_nodes <= 0 or self.max_seconds <= 0:
            raise ValueError("budget limits must be positive")


@dataclass(frozen=True)
class QueryResult:
    """``answer`` is True, False, or None when the budget ran out."""

    answer: bool | None
    witness: Colouring | None = None
    nodes: int = 0

    @property
    def unknown(self) -> bool:
        return self.answer is None


@dataclass(frozen=True)
class ChromaticResult:
    value: int | None
    lower_bound: int
    witness: Colouring | None = None
    nodes: int = 0
    budget_exhausted: bool = False

    @property
    def exact(self) -> bool:
        return self.value is not None


def verify_decomposition(blocks: Iterable[Sequence[int]], target: GraphSpec) -> VerifyReport:
    wanted = target.edges()
    used: Counter = Counter()
    for b in blocks:
        for e in block_edges(b):
            used[e] += 1
    violations = []
    for e in sorted(wanted - set(used)):
        violations.append(Violation(MISSING_EDGE, e))
    for e, count in sorted(used.items()):
        if e not in wanted:
            violations.append(Violation(STRAY_EDGE, e))
        elif count > 1:
            violations.append(Violation(DUPLICATE_EDGE, e))
    return VerifyReport(tuple(violations))


def verify_colouring(system: PathSystem, colouring: Colouring) -> VerifyReport:
    violations = [Violation(UNASSIGNED_VERTEX, (v,)) for v in sorted(system.vertices) if v not in colouring]
    if violations:
        return VerifyReport(tuple(violations))
    for b in system.blocks:
        if len({colouring[v] for v in b}) == 1:
            violations.append(Violation(MONOCHROMATIC_BLOCK, b))
    return VerifyReport(tuple(violations))


def equitability(colouring: Colouring) -> str:
    return colouring.equitability()


class _Search:
    """Depth-first search over weak k-colourings with propagation.

    One instance serves one query; the trail records every state change so that
    backtracking restores blocks and domains exactly.
    """

    def __init__(self, system: PathSystem, k: int, budget: SearchBudget | None):
        self.k = k
        self.m = system.m
        self.labels = sorted(system.vertices)
        index = {v: i for i, v in enumerate(self.labels)}
        self.blocks = [tuple(index[v] for v in b) for b in system.blocks]
        self.n = len(self.labels)
        self.incident: list[list[int]] = [[] for _ in range(self.n)]
        for bi, b in enumerate(self.blocks):
            for v in b:
                self.incident[v].append(bi)
        self.block_sum = [sum(b) for b in self.blocks]
        self.full = (1 << k) - 1
        self.domain = [self.full] * self.n
        self.colour = [-1] * self.n
        self.count = [0] * len(self.blocks)
        # -1: nothing counted yet, -2: mixed colours, otherwise the common colour
        self.common = [-1] * len(self.blocks)
        self.counted_sum = [0] * len(self.blocks)
        self.trail: list[tuple] = []
        self.used = 0  # bitmask of colours used so far
        budget = budget or SearchBudget()
        self.max_nodes = budget.max_nodes
        self.deadline = time.monotonic() + budget.max_seconds
        self.nodes = 0

    # state changes ---------------------------------------------------------

    def _assign(self, v: int, c: int) -> bool:
        if self.colour[v] != -1:
            return self.colour[v] == c
        if not self.domain[v] >> c & 1:
            return False
        self.trail.append((0, v, self.domain[v], self.used))
        self.colour[v] = c
        self.domain[v] = 1 << c
        self.used |= 1 << c
        m = self.m
        for bi in self.incident[v]:
            self.trail.append((1, bi, self.count[bi], self.common[bi], self.counted_sum[bi]))
            self.count[bi] += 1
            self.counted_sum[bi] += v
            common = self.common[bi]
            if common == -1:
                self.common[bi] = c
            elif common != c:
                self.common[bi] = -2
                continue
            if self.count[bi] == m:
                return False
            if self.count[bi] == m - 1:
                u = self.block_sum[bi] - self.counted_sum[bi]
                if not self._forbid(u, c):
                    return False
        return True

    def _forbid(self, u: int, c: int) -> bool:
        if self.colour[u] != -1:
            # u is coloured but its blocks are still being counted
            return self.colour[u] != c
        dom = self.domain[u]
        if not dom >> c & 1:
            return True
        dom &= ~(1 << c)
        if dom == 0:
            return False
        self.trail.append((2, u, self.domain[u]))
        self.domain[u] = dom
        if dom & (dom - 1) == 0:
            return self._assign(u, dom.bit_length() - 1)
        return True

    def _undo(self, mark: int) -> None:
        trail = self.trail
        while len(trail) > mark:
            entry = trail.pop()
            tag = entry[0]
            if tag == 1:
                _, bi, cnt, common, csum = entry
                self.count[bi] = cnt
                self.common[bi] = common
                self.counted_sum[bi] = csum
            elif tag == 0:
                _, v, dom, used = entry
                self.colour[v] = -1
                self.domain[v] = dom
                self.used = used
            else:
                _, u, dom = entry
                self.domain[u] = dom

    # search ----------------------------------------------------------------

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.max_nodes or (self.nodes & 1023 == 0 and time.monotonic() > self.deadline):
            raise BudgetExhausted(self.nodes)

    def _choose(self) -> int:
        best, best_key = -1, None
        m = self.m
        for v in range(self.n):
            if self.colour[v] != -1:
                continue
            size = bin(self.domain[v]).count("1")
            pressure = 0
            for bi in self.incident[v]:
                if self.common[bi] >= 0 and self.count[bi] >= m - 2:
                    pressure += 1
            key = (size, -pressure, v)
            if best_key is None or key < best_key:
                best, best_key = v, key
        return best

    def _values(self, v: int, break_symmetry: bool) -> list[int]:
        dom = self.domain[v]
        if break_symmetry:
            unused = self.full & ~self.used
            if unused:
                dom &= self.used | (unused & -unused)
        return [c for c in range(self.k) if dom >> c & 1]

    def solutions(self, break_symmetry: bool):
        """Yield every complete colouring (as a list indexed like ``labels``)."""
        v = self._choose()
        if v == -1:
            yield list(self.colour)
            return
        for c in self._values(v, break_symmetry):
            self._tick()
            mark = len(self.trail)
            if self._assign(v, c):
                yield from self.solutions(break_symmetry)
            self._undo(mark)

    def fix(self, label: int, c: int) -> bool:
        i = self.labels.index(label)
        return self._assign(i, c)

    def to_colouring(self, colours: list[int]) -> Colouring:
        return Colouring(self.k, {self.labels[i]: c for i, c in enumerate(colours)})


def _enumerate(system: PathSystem, anchor: int, limit: int, budget: SearchBudget | None) -> tuple[list[Colouring], int]:
    if anchor not in system.vertices:
        raise ValueError(f"anchor {anchor} is not a vertex of the system")
    search = _Search(system, 2, budget)
    out: list[Colouring] = []
    if limit <= 0 or not search.fix(anchor, 0):
        return out, search.nodes
    for sol in search.solutions(break_symmetry=False):
        out.append(search.to_colouring(sol))
        if len(out) >= limit:
            break
    return out, search.nodes


def enumerate_2colourings(
    system: PathSystem, anchor: int, limit: int, budget: SearchBudget | None = None
) -> list[Colouring]:
    """All valid 2-colourings with ``anchor`` in class 0, in search order, up to ``limit``.

    Raises ``BudgetExhausted`` if the search runs out of nodes or time before
    it can either reach ``limit`` or finish.
    """
    return _enumerate(system, anchor, limit, budget)[0]


def is_uniquely_2chromatic(system: PathSystem, budget: SearchBudget | None = None) -> QueryResult:
    anchor = min(system.vertices)
    try:
        found, nodes = _enumerate(system, anchor, 2, budget)
    except BudgetExhausted as exc:
        return QueryResult(None, nodes=exc.nodes)
    witness = found[0] if found else None
    return QueryResult(len(found) == 1, witness, nodes)


def forced_distinct(system: PathSystem, u: int, v: int, budget: SearchBudget | None = None) -> QueryResult:
    """True iff every valid 2-colouring separates ``u`` and ``v``; a False answer carries a witness."""
    if u == v:
        raise ValueError("forced_distinct needs two different vertices")
    search = _Search(system, 2, budget)
    if not (search.fix(u, 0) and search.fix(v, 0)):
        return QueryResult(True, nodes=search.nodes)
    try:
        for sol in search.solutions(break_symmetry=False):
            return QueryResult(False, search.to_colouring(sol), search.nodes)
    except BudgetExhausted as exc:
        return QueryResult(None, nodes=exc.nodes)
    return QueryResult(True, nodes=search.nodes)


def is_k_colourable(system: PathSystem, k: int, budget: SearchBudget | None = None) -> QueryResult:
    if k < 1:
        raise InvalidK("k must be at least 1")
    if k == 1:
        if system.blocks:
            return QueryResult(False)
        return QueryResult(True, Colouring(1, {v: 0 for v in system.vertices}))
    search = _Search(system, k, budget)
    try:
        for sol in search.solutions(break_symmetry=True):
            return QueryResult(True, search.to_colouring(sol), search.nodes)
    except BudgetExhausted as exc:
        return QueryResult(None, nodes=exc.nodes)
    return QueryResult(False, nodes=search.nodes)


def chromatic_number(system: PathSystem, budget: SearchBudget | None = None, max_k: int | None = None) -> ChromaticResult:
    """Smallest k admitting a weak k-colouring, found by ascending search.

    When a query runs out of budget (or ``max_k`` is passed without success)
    only a lower bound is returned.
    """
    if not system.blocks:
        raise NotApplicable("a system without blocks has no chromatic number")
    limit = max_k if max_k is not None else system.order
    nodes = 0
    for k in range(2, limit + 1):
        res = is_k_colourable(system, k, budget)
        nodes += res.nodes
        if res.answer is None:
            return ChromaticResult(None, k, nodes=nodes, budget_exhausted=True)
        if res.answer:
            return ChromaticResult(k, k, res.witness, nodes)
    return ChromaticResult(None, limit + 1, nodes=nodes)


def brute_force_2colourings(system: PathSystem, anchor: int) -> list[Colouring]:
    """Reference enumeration over all 2^(n-1) anchored assignments."""
    others = sorted(system.vertices - {anchor})
    out = []
    for mask in range(1 << len(others)):
        assignment = {anchor: 0}
        for i, v in enumerate(others):
            assignment[v] = mask >> i & 1
        if all(len({assignment[v] for v in b}) > 1 for b in system.blocks):
            out.append(Colouring(2, assignment))
    return out


# seed search ----------------------------------------------------------------


def _path_decompositions(edges: list[tuple[int, int]], m: int, rng: random.Random) -> list[list[PathBlock]]:
    """Every split of ``edges`` into paths of ``m`` vertices (small inputs only)."""
    adj: dict[int, set[int]] = {}
    for u, v in edges:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    results: list[list[PathBlock]] = []

    def paths_through(first: tuple[int, int], remaining: set):
        # paths of m-1 edges that use edge ``first``; extend both ends
        def grow(path):
            if len(path) == m:
                yield path
                return
            for end_left in (False, True):
                tip = path[0] if end_left else path[-1]
                for w in sorted(adj[tip]):
                    if w in path or edge(tip, w) not in remaining:
                        continue
                    yield from grow([w, *path] if end_left else [*path, w])

        seen = set()
        for p in grow(list(first)):
            c = canonicalize(p)
            if c not in seen and all(e in remaining for e in block_edges(p)):
                seen.add(c)
                yield c

    def rec(remaining: set, acc: list[PathBlock]):
        if not remaining:
            results.append(list(acc))
            return
        first = min(remaining)
        for p in paths_through(first, remaining):
            es = set(block_edges(p))
            if es <= remaining:
                acc.append(p)
                rec(remaining - es, acc)
                acc.pop()

    rec(set(edges), [])
    rng.shuffle(results)
    return results


def search_seed(
    k: int,
    n: int,
    budget: SearchBudget | None = None,
    seed: int = 0,
    trade_size: int = 3,
) -> tuple[PathSystem, Colouring] | None:
    """Random walk over P4 systems of order ``n`` looking for one that needs ``k`` colours.

    Starts from the equitable 2-colourable construction and applies block
    trades: a few blocks that share vertices are removed and their edges are
    re-split into paths another way.  Each visited system is tested for
    (k-1)-colourability; the first that is refuted exhaustively is returned
    with a k-colouring witness.  Returns None when the budget runs out.
    """
    from .builder import build_2chromatic, is_admissible

    if k < 3:
        raise InvalidK("seed search targets k >= 3")
    if not is_admissible(n, 4) or n < 4:
        raise ValueError(f"order {n} is not admissible for P4 systems")
    budget = budget or SearchBudget()
    rng = random.Random(seed)
    deadline = time.monotonic() + budget.max_seconds
    spent = 0
    system, _ = build_2chromatic(n)
    blocks = list(system.blocks)
    while spent < budget.max_nodes and time.monotonic() < deadline:
        candidate = PathSystem(4, system.vertices, blocks)
        per_query = SearchBudget(max(1, min(budget.max_nodes - spent, 10**5)), max(1e-3, deadline - time.monotonic()))
        lower = is_k_colourable(candidate, k - 1, per_query)
        spent += max(1, lower.nodes)
        if lower.answer is False:
            upper = is_k_colourable(candidate, k, per_query)
            spent += upper.nodes
            if upper.answer:
                return candidate, upper.witness
        blocks = _trade(blocks, trade_size, rng)
    return None


def _trade(blocks: list[PathBlock], size: int, rng: random.Random) -> list[PathBlock]:
    if len(blocks) < 2:
        return blocks
    start = rng.randrange(len(blocks))
    chosen = [start]
    touched = set(blocks[start])
    order = list(range(len(blocks)))
    rng.shuffle(order)
    for i in order:
        if len(chosen) >= size:
            break
        if i not in chosen and touched & set(blocks[i]):
            chosen.append(i)
            touched |= set(blocks[i])
    if len(chosen) < 2:
        return blocks
    old = [blocks[i] for i in chosen]
    edges = [e for b in old for e in block_edges(b)]
    options = [d for d in _path_decompositions(edges, len(old[0]), rng) if sorted(d) != sorted(old)]
    if not options:
        return blocks
    keep = [b for i, b in enumerate(blocks) if i not in set(chosen)]
    return keep + options[0]
