"""Canonical keys for lattice polytopes up to affine lattice isomorphism.

For an ordering ``v0, v1, ..., v_{m-1}`` of the vertices, let ``X`` be the
matrix with rows ``v_i - v0``.  Lattice automorphisms act by ``X -> X @ A`` with
``A`` in ``GL(n, Z)``, so the column-style Hermite form of ``X`` is a complete
invariant of the ordered vertex set.  The key is the lexicographic minimum of
that form over all orderings, with each row prefixed by a vertex colour (the
sorted multiset of facet distances, itself an invariant).

The first ``k`` rows of the Hermite form depend only on the first ``k``
vertices chosen, so the minimum is found row by row, keeping every partial
ordering that ties for the smallest prefix.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

from gorpoly import intmat
from gorpoly.polytope import LatticePolytope, PolytopeError


@dataclass(frozen=True)
class NormalFormKey:
    dim: int
    n_vertices: int
    rows: tuple[tuple[int, ...], ...]

    def serialize(self) -> bytes:
        body = ";".join(",".join(map(str, r)) for r in self.rows)
        return f"{self.dim}|{self.n_vertices}|{body}".encode()

    @property
    def digest(self) -> str:
        return hashlib.sha256(self.serialize()).hexdigest()[:16]

    def __lt__(self, other: "NormalFormKey") -> bool:
        return (self.dim, self.n_vertices, self.rows) < (other.dim, other.n_vertices, other.rows)


def _vertex_colours(P: LatticePolytope) -> list[tuple[int, ...]]:
    return [tuple(sorted(f.value(v) for f in P.facets)) for v in P.vertices]


def _candidate_row(x, U, rk, n):
    """Next Hermite row for vertex difference ``x`` under transform ``U``."""
    r = intmat.vecmat(x, U)
    free = r[rk:]
    g = intmat.gcd_all(free)
    if g == 0:
        return r, 0
    head = tuple(v % g for v in r[:rk])
    return head + (g,) + (0,) * (n - rk - 1), g


def _advance(x, U, rk, n):
    """Column operations making ``x @ U`` a Hermite row; returns ``(U', rank')``."""
    U = [list(row) for row in U]
    r = list(intmat.vecmat(x, U))
    if not any(r[rk:]):
        return U, rk

    def colop(i, j, p, q, s, t):
        # columns (i, j) <- (p*col_i + q*col_j, s*col_i + t*col_j)
        for row in U:
            a, b = row[i], row[j]
            row[i] = p * a + q * b
            row[j] = s * a + t * b
        a, b = r[i], r[j]
        r[i] = p * a + q * b
        r[j] = s * a + t * b

    for j in range(rk + 1, n):
        if r[j]:
            g, s, t = intmat.xgcd(r[rk], r[j])
            p, q = r[rk] // g, r[j] // g
            colop(rk, j, s, t, -q, p)
    if r[rk] < 0:
        for row in U:
            row[rk] = -row[rk]
        r[rk] = -r[rk]
    g = r[rk]
    for i in range(rk):
        q = r[i] // g
        if q:
            for row in U:
                row[i] -= q * row[rk]
            r[i] -= q * g
    return U, rk + 1


def normal_form(P: LatticePolytope) -> NormalFormKey:
    """Canonical key: equal keys iff the polytopes are lattice isomorphic."""
    if not P.is_full_dimensional:
        P = P.in_chart()
    n = P.dim_ambient
    verts = P.vertices
    m = len(verts)
    colours = _vertex_colours(P)
    first = min(colours)
    # state: (v0 index, used tuple, U, rank)
    states = [(i, (i,), intmat.identity(n), 0) for i in range(m) if colours[i] == first]
    rows: list[tuple[int, ...]] = [first]
    for _ in range(m - 1):
        best = None
        chosen = []
        for v0, used, U, rk in states:
            base = verts[v0]
            used_set = set(used)
            for j in range(m):
                if j in used_set:
                    continue
                x = [a - b for a, b in zip(verts[j], base)]
                hrow, _ = _candidate_row(x, U, rk, n)
                row = colours[j] + hrow
                if best is None or row < best:
                    best = row
                    chosen = [(v0, used, U, rk, j, x)]
                elif row == best:
                    chosen.append((v0, used, U, rk, j, x))
        rows.append(best)
        states = []
        for v0, used, U, rk, j, x in chosen:
            U2, rk2 = _advance(x, U, rk, n)
            states.append((v0, used + (j,), U2, rk2))
    return NormalFormKey(n, m, tuple(rows))


def are_isomorphic(P: LatticePolytope, Q: LatticePolytope) -> bool:
    if P.dim_affine != Q.dim_affine:
        return False
    if P.dim_ambient != Q.dim_ambient and P.is_full_dimensional and Q.is_full_dimensional:
        raise PolytopeError("dimension mismatch")
    if len(P.vertices) != len(Q.vertices):
        return False
    return normal_form(P) == normal_form(Q)


def canonical_vertices(P: LatticePolytope) -> list[tuple[int, ...]]:
    """Vertices of a fixed representative of the isomorphism class of ``P``.

    Reads the Hermite rows of the key back as coordinates, so isomorphic
    inputs yield identical vertex lists.
    """
    key = normal_form(P)
    n = key.dim
    ncol = len(key.rows[0])
    pts = [(0,) * n] + [tuple(r[ncol:]) for r in key.rows[1:]]
    return sorted(pts)


__all__ = ["NormalFormKey", "are_isomorphic", "canonical_vertices", "normal_form"]
