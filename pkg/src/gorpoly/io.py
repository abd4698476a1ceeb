"""Reading and writing polytopes.

Two input formats are accepted.  The text format is a header line
``d <dim> v <count>`` followed by one vertex per line; the JSON format is
``{"dim": n, "vertices": [[...], ...]}``.  Output is always JSON.
"""

from __future__ import annotations

import json
from pathlib import Path

from gorpoly.polytope import LatticePolytope, PolytopeError, convex_hull


def _parse_int(token: str) -> int:
    try:
        return int(token, 10)
    except ValueError:
        raise PolytopeError(f"non-integer token {token!r}") from None


def parse_text(text: str) -> LatticePolytope:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise PolytopeError("empty polytope file")
    head = lines[0].split()
    if len(head) != 4 or head[0] != "d" or head[2] != "v":
        raise PolytopeError("header must read 'd <dim> v <count>'")
    dim, count = _parse_int(head[1]), _parse_int(head[3])
    rows = [[_parse_int(t) for t in ln.split()] for ln in lines[1:]]
    if len(rows) != count:
        raise PolytopeError(f"expected {count} vertices, found {len(rows)}")
    return convex_hull(rows, dim)


def parse_json(text: str) -> LatticePolytope:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PolytopeError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict) or "dim" not in data or "vertices" not in data:
        raise PolytopeError("JSON polytope needs 'dim' and 'vertices'")
    dim = data["dim"]
    rows = data["vertices"]
    if not isinstance(dim, int) or isinstance(dim, bool):
        raise PolytopeError("'dim' must be an integer")
    if not isinstance(rows, list) or not rows:
        raise PolytopeError("'vertices' must be a non-empty list")
    for row in rows:
        if not isinstance(row, list) or any(
                not isinstance(x, int) or isinstance(x, bool) for x in row):
            raise PolytopeError(f"non-integer vertex {row!r}")
    return convex_hull(rows, dim)


def parse(text: str) -> LatticePolytope:
    """Parse either format, deciding by the first non-blank character."""
    if text.lstrip().startswith("{"):
        return parse_json(text)
    return parse_text(text)


def read_polytope(path: str | Path) -> LatticePolytope:
    return parse(Path(path).read_text())


def to_json_obj(P: LatticePolytope) -> dict:
    return {"dim": P.dim_ambient, "vertices": [list(v) for v in P.vertices]}


def to_text(P: LatticePolytope) -> str:
    lines = [f"d {P.dim_ambient} v {len(P.vertices)}"]
    lines += [" ".join(map(str, v)) for v in P.vertices]
    return "\n".join(lines) + "\n"
