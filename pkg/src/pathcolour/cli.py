"""Command-line front end.

Exit codes: 0 success, 1 a checked property is false, 2 usage or input
error, 3 internal failure (a construction failed its own verification),
4 the solver ran out of budget.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import fileformat as ff
from .builder import NotAdmissible, NotADesign, build_2chromatic, compose_design, is_admissible
from .core import Colouring, ExtensionContext, GraphSpec, PathSystem
from .ingredients import KINDS, build_ingredient, lookup
from .kchromatic import STEPS, Unreachable, UnsupportedK, WrongResidue, extend_k_chromatic, k_chromatic_pipeline
from .solver import (
    SearchBudget,
    chromatic_number,
    forced_distinct,
    is_uniquely_2chromatic,
    verify_colouring,
    verify_decomposition,
)
from .unique import (
    LEMMAS,
    CriticalPattern,
    GuardFailed,
    NotSupported,
    PatternUnavailable,
    extend_unique,
    find_patterns,
    unique_pipeline,
)
from .unique.growth import PATTERN_KIND

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_INTERNAL, EXIT_UNKNOWN = 0, 1, 2, 3, 4

K_LEMMAS = tuple(f"kplus{s}" for s in sorted({s for steps in STEPS.values() for s in steps}))
USAGE_ERRORS = (
    ff.FormatError,
    NotAdmissible,
    NotADesign,
    NotSupported,
    GuardFailed,
    PatternUnavailable,
    WrongResidue,
    UnsupportedK,
    Unreachable,
    FileNotFoundError,
    IsADirectoryError,
)


class SelfCheckFailed(RuntimeError):
    pass


def _err(msg: str) -> None:
    print(msg, file=sys.stderr)


def _budget(args) -> SearchBudget:
    try:
        return SearchBudget(args.max_nodes, args.max_seconds)
    except ValueError as exc:
        raise ff.FormatError(str(exc)) from None


def _write_checked(prefix: str, system: PathSystem, colouring: Colouring | None, target: GraphSpec | None = None) -> None:
    """Write the files, read them back, and verify what is on disk."""
    paths = ff.write_pair(prefix, system, colouring)
    disk = ff.read_system(paths[0])
    report = verify_decomposition(disk.blocks, target or GraphSpec.complete(disk.vertices))
    if colouring is not None:
        report = type(report)(report.violations + verify_colouring(disk, ff.read_colouring(paths[1])).violations)
    if not report.ok:
        raise SelfCheckFailed("; ".join(str(v) for v in report.violations[:5]))
    for p in paths:
        print(f"WROTE {p}")
    print(f"ORDER {disk.order}")
    print(f"BLOCKS {len(disk.blocks)}")
    if colouring is not None:
        print("CLASSES " + " ".join(str(s) for s in colouring.class_sizes()))


def cmd_construct(args) -> int:
    n = args.order
    if args.mode == "two-chromatic":
        system, colouring = build_2chromatic(n)
    elif args.mode == "unique":
        ctx = unique_pipeline(n)
        system, colouring = ctx.system, ctx.colouring
    else:
        if not (args.seed_system and args.seed_colouring):
            raise ff.FormatError("k-chromatic mode needs --seed-system and --seed-colouring")
        if not is_admissible(n, 4):
            raise NotAdmissible(f"no P4 system of order {n}")
        seed = ff.read_system(args.seed_system)
        system, colouring = k_chromatic_pipeline(seed, ff.read_colouring(args.seed_colouring), n)
    _write_checked(args.out, system, colouring)
    return EXIT_OK


def cmd_ingredient(args) -> int:
    try:
        g = lookup(args.kind)
    except KeyError as exc:
        raise ff.FormatError(str(exc.args[0])) from None
    left = list(range(1, g.left + 1))
    right = list(range(g.left + 1, g.left + g.right + 1))
    blocks, target, colouring = build_ingredient(g.tag, left, right)
    system = PathSystem(4, left + right, blocks)
    _write_checked(args.out, system, colouring, target)
    print(f"TARGET {target.kind} {_vertex_range(left)} {_vertex_range(right)}".rstrip())
    return EXIT_OK


def _vertex_range(vs: list[int]) -> str:
    return f"{vs[0]}-{vs[-1]}" if vs else ""


def cmd_compose(args) -> int:
    n, blocks = ff.loads_design(Path(args.design).read_text())
    system = compose_design(blocks, n)
    _write_checked(args.out, system, None)
    return EXIT_OK


def _parse_target(spec: str, system: PathSystem) -> GraphSpec:
    if spec == "complete":
        return GraphSpec.complete(system.vertices)
    kind, _, rest = spec.partition(":")
    left, _, right = rest.partition(":")
    if kind == "bipartite":
        return GraphSpec.complete_bipartite(ff.parse_vertex_list(left), ff.parse_vertex_list(right))
    if kind == "bipartite_plus_clique":
        return GraphSpec.bipartite_plus_clique(ff.parse_vertex_list(left), ff.parse_vertex_list(right))
    raise ff.FormatError(f"unknown target {spec!r}; use complete, bipartite:L:R or bipartite_plus_clique:L:R")


def cmd_verify(args) -> int:
    system = ff.read_system(args.system)
    target = _parse_target(args.target, system)
    violations = list(verify_decomposition(system.blocks, target).violations)
    if args.colouring:
        violations += verify_colouring(system, ff.read_colouring(args.colouring)).violations
    for v in violations:
        print(v)
    if violations:
        return EXIT_FALSE
    print("OK")
    return EXIT_OK


def cmd_analyze(args) -> int:
    system = ff.read_system(args.system)
    budget = _budget(args)
    if args.query == "chromatic":
        if args.max_k is not None and args.max_k < 2:
            raise ff.FormatError("--max-k must be at least 2")
        res = chromatic_number(system, budget, args.max_k)
        if res.budget_exhausted:
            print("UNKNOWN budget")
            return EXIT_UNKNOWN
        print(f"CHROMATIC {res.value}" if res.exact else f"CHROMATIC >{res.lower_bound - 1}")
        return EXIT_OK
    if args.query == "unique":
        res = is_uniquely_2chromatic(system, budget)
        label = "UNIQUE"
    else:
        for v in (args.u, args.v):
            if v not in system.vertices:
                raise ff.FormatError(f"vertex {v} is not in the system")
        if args.u == args.v:
            raise ff.FormatError("--u and --v must differ")
        res = forced_distinct(system, args.u, args.v, budget)
        label = "FORCED_DISTINCT"
    if res.unknown:
        print("UNKNOWN budget")
        return EXIT_UNKNOWN
    print(f"{label} {'true' if res.answer else 'false'}")
    return EXIT_OK


_CANDIDATES = 20


def _unique_context(system: PathSystem, colouring: Colouring, lemma: str, budget: SearchBudget) -> ExtensionContext:
    """Extend a file-based system, recovering a usable pattern.

    The canonical pipeline system of the same order carries its registry; any
    other system is searched for candidate patterns, each certified by the
    solver before use.
    """
    n = system.order
    # residue guards fire before any pattern is looked at
    try:
        extend_unique(ExtensionContext(system, colouring, ()), lemma)
    except PatternUnavailable:
        pass
    if n >= 109 and n % 3 != 2:
        canon = unique_pipeline(n)
        if canon.system.block_set == system.block_set and all(p.matches(colouring) for p in canon.noncritical):
            return extend_unique(ExtensionContext(system, colouring, canon.noncritical), lemma)
    for pat in find_patterns(system, colouring, PATTERN_KIND[lemma], limit=_CANDIDATES):
        try:
            return extend_unique(ExtensionContext(system, colouring, (pat,)), lemma, certify=True, budget=budget)
        except CriticalPattern:
            continue
    raise PatternUnavailable(f"no certified non-critical {PATTERN_KIND[lemma]} pattern found for {lemma}")


def cmd_extend(args) -> int:
    system = ff.read_system(args.system)
    colouring = ff.read_colouring(args.colouring)
    report = verify_decomposition(system.blocks, GraphSpec.complete(system.vertices))
    report = type(report)(report.violations + verify_colouring(system, colouring).violations)
    if not report.ok:
        for v in report.violations:
            _err(str(v))
        raise ff.FormatError("input files do not verify as a complete coloured system")
    if args.lemma in K_LEMMAS:
        out, out_col = extend_k_chromatic(system, colouring, int(args.lemma[len("kplus"):]))
    else:
        if colouring.k != 2:
            raise GuardFailed(f"GUARD 2-colouring required, got k={colouring.k}")
        ctx = _unique_context(system, colouring, args.lemma, _budget(args))
        out, out_col = ctx.system, ctx.colouring
    _write_checked(args.out, out, out_col)
    return EXIT_OK


def _add_budget(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-nodes", type=int, default=10**7, help="search node limit")
    p.add_argument("--max-seconds", type=float, default=60.0, help="search time limit")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pathcolour", description="Build and check coloured P4 path systems.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a system of a given order")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--mode", choices=("two-chromatic", "unique", "k-chromatic"), default="two-chromatic")
    p.add_argument("--seed-system", help="k-chromatic mode: seed system file")
    p.add_argument("--seed-colouring", help="k-chromatic mode: seed colouring file")
    p.add_argument("--out", required=True, help="output prefix; writes PREFIX.sys and PREFIX.col")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("ingredient", help="write one small gadget on labels 1..p+q")
    p.add_argument("--kind", required=True, help="one of " + ", ".join(KINDS))
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_ingredient)

    p = sub.add_parser("compose", help="turn a design with even block size into a path system")
    p.add_argument("--design", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("verify", help="check a decomposition and optionally a colouring")
    p.add_argument("system")
    p.add_argument("--colouring")
    p.add_argument("--target", default="complete", help="complete, bipartite:L:R or bipartite_plus_clique:L:R")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("analyze", help="solver queries")
    p.add_argument("system")
    qs = p.add_subparsers(dest="query", required=True)
    q = qs.add_parser("chromatic")
    q.add_argument("--max-k", type=int)
    _add_budget(q)
    q = qs.add_parser("unique")
    _add_budget(q)
    q = qs.add_parser("forced-pair")
    q.add_argument("--u", type=int, required=True)
    q.add_argument("--v", type=int, required=True)
    _add_budget(q)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("extend", help="apply one growth step")
    p.add_argument("system")
    p.add_argument("colouring")
    p.add_argument("--lemma", required=True, choices=LEMMAS + K_LEMMAS)
    p.add_argument("--out", required=True)
    _add_budget(p)
    p.set_defaults(func=cmd_extend)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except USAGE_ERRORS as exc:
        _err(str(exc))
        return EXIT_USAGE
    except SelfCheckFailed as exc:
        _err(f"self-verification failed: {exc}")
        return EXIT_INTERNAL
    except Exception as exc:  # anything else is a bug in a construction
        _err(f"internal error: {type(exc).__name__}: {exc}")
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
