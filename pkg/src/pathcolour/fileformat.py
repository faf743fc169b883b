"""Plain-text formats for path systems, colourings and block designs.

System file::

    PATHSYS 1 <n> <m> <b>
    <b lines of m space-separated vertices>

Colouring file::

    COLOURING <n> <k>
    <n lines "vertex class">

Lines starting with ``#`` and blank lines are ignored everywhere.
"""

from __future__ import annotations

from pathlib import Path

from .builder import parse_design
from .core import Colouring, PathSystem


class FormatError(ValueError):
    pass


def _rows(text: str) -> list[list[str]]:
    return [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]


def _ints(row: list[str], where: str) -> list[int]:
    try:
        return [int(x) for x in row]
    except ValueError:
        raise FormatError(f"{where}: expected integers, got {' '.join(row)!r}") from None


def dumps_system(system: PathSystem) -> str:
    lines = [f"PATHSYS 1 {system.order} {system.m} {len(system.blocks)}"]
    lines += [" ".join(map(str, b)) for b in system.blocks]
    return "\n".join(lines) + "\n"


def loads_system(text: str) -> PathSystem:
    rows = _rows(text)
    if not rows or rows[0][:2] != ["PATHSYS", "1"] or len(rows[0]) != 5:
        raise FormatError("expected header 'PATHSYS 1 <n> <m> <b>'")
    n, m, count = _ints(rows[0][2:], "header")
    body = rows[1:]
    if len(body) != count:
        raise FormatError(f"header announces {count} blocks but the file has {len(body)}")
    blocks = []
    for i, row in enumerate(body, start=1):
        block = _ints(row, f"block {i}")
        if len(block) != m or len(set(block)) != m:
            raise FormatError(f"block {i} must list {m} distinct vertices")
        if not all(1 <= v <= n for v in block):
            raise FormatError(f"block {i} uses a vertex outside 1..{n}")
        blocks.append(block)
    try:
        return PathSystem(m, range(1, n + 1), blocks)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def dumps_colouring(colouring: Colouring) -> str:
    verts = sorted(colouring.vertices)
    lines = [f"COLOURING {len(verts)} {colouring.k}"]
    lines += [f"{v} {colouring[v]}" for v in verts]
    return "\n".join(lines) + "\n"


def loads_colouring(text: str) -> Colouring:
    rows = _rows(text)
    if not rows or rows[0][0] != "COLOURING" or len(rows[0]) != 3:
        raise FormatError("expected header 'COLOURING <n> <k>'")
    n, k = _ints(rows[0][1:], "header")
    assignment: dict[int, int] = {}
    for row in rows[1:]:
        if len(row) != 2:
            raise FormatError(f"expected 'vertex class', got {' '.join(row)!r}")
        v, c = _ints(row, "colouring line")
        if v in assignment:
            raise FormatError(f"vertex {v} is listed twice")
        assignment[v] = c
    if set(assignment) != set(range(1, n + 1)):
        raise FormatError(f"colouring must list every vertex 1..{n} exactly once")
    try:
        return Colouring(k, assignment)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def loads_design(text: str) -> tuple[int, list[list[int]]]:
    try:
        return parse_design(text.splitlines())
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def read_system(path: str | Path) -> PathSystem:
    return loads_system(Path(path).read_text())


def read_colouring(path: str | Path) -> Colouring:
    return loads_colouring(Path(path).read_text())


def write_text(path: str | Path, text: str) -> None:
    Path(path).write_text(text)


def write_pair(prefix: str | Path, system: PathSystem, colouring: Colouring | None) -> list[Path]:
    """Write ``<prefix>.sys`` and, if given, ``<prefix>.col``; returns the paths written."""
    prefix = Path(prefix)
    out = [prefix.with_name(prefix.name + ".sys")]
    write_text(out[0], dumps_system(system))
    if colouring is not None:
        out.append(prefix.with_name(prefix.name + ".col"))
        write_text(out[1], dumps_colouring(colouring))
    return out


def parse_vertex_list(spec: str) -> list[int]:
    """``"1-3,7"`` -> ``[1, 2, 3, 7]``."""
    out: list[int] = []
    for part in spec.split(","):
        part = part.strip()
        if not part:
            continue
        lo, sep, hi = part.partition("-")
        try:
            out += list(range(int(lo), int(hi) + 1)) if sep else [int(lo)]
        except ValueError:
            raise FormatError(f"bad vertex list {spec!r}") from None
    return out

