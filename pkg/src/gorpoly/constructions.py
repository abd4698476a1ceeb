"""Minkowski sums and decompositions, Cayley polytopes, pyramids, and two special families."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from gorpoly import intmat
from gorpoly.polytope import LatticePolytope, PolytopeError, convex_hull, simplex

Point = tuple[int, ...]


@dataclass(frozen=True)
class MinkowskiDecomposition:
    """A reflexive polygon written as a sum of non-point lattice polytopes.

    Summands are translated so that their lexicographically smallest vertex
    is the origin, and sorted by vertex list.
    """

    base: LatticePolytope
    summands: tuple[LatticePolytope, ...]

    @property
    def r(self) -> int:
        return len(self.summands)


def minkowski_sum(A: LatticePolytope, B: LatticePolytope) -> LatticePolytope:
    if A.dim_ambient != B.dim_ambient:
        raise PolytopeError("Minkowski sum of polytopes in different lattices")
    pts = {tuple(a + b for a, b in zip(u, v)) for u in A.vertices for v in B.vertices}
    return convex_hull(pts, A.dim_ambient)


def normalize_translation(P: LatticePolytope) -> LatticePolytope:
    """Translate so the lexicographically smallest vertex is the origin."""
    return P.translate(tuple(-x for x in P.vertices[0]))


def _cyclic_vertices(P: LatticePolytope) -> list[Point]:
    """Vertices of a polygon in counterclockwise order starting from the smallest."""
    verts = list(P.vertices)
    nbrs: dict[Point, list[Point]] = {v: [] for v in verts}
    for f in P.faces(1):
        a, b = verts[f.vertices[0]], verts[f.vertices[1]]
        nbrs[a].append(b)
        nbrs[b].append(a)

    def keeps_left(p, q):
        return all((q[0] - p[0]) * (w[1] - p[1]) - (q[1] - p[1]) * (w[0] - p[0]) >= 0
                   for w in verts)

    start = verts[0]
    a, b = nbrs[start]
    prev, nxt = start, (a if keeps_left(start, a) else b)
    order = [start]
    while nxt != start:
        order.append(nxt)
        x, y = nbrs[nxt]
        prev, nxt = nxt, (y if x == prev else x)
    return order


def edge_sequence(P: LatticePolytope) -> list[tuple[Point, int]]:
    """Counterclockwise edges as ``(primitive direction, lattice length)``."""
    if P.dim != 2 or P.dim_ambient != 2:
        raise PolytopeError("edge sequence needs a full-dimensional polygon")
    cyc = _cyclic_vertices(P)
    out = []
    for i, v in enumerate(cyc):
        w = cyc[(i + 1) % len(cyc)]
        d = (w[0] - v[0], w[1] - v[1])
        g = intmat.gcd_all(d)
        out.append(((d[0] // g, d[1] // g), g))
    return out


def _polygon_from_edges(dirs, mults) -> LatticePolytope:
    pts = [(0, 0)]
    x = (0, 0)
    for u, k in zip(dirs, mults):
        if k:
            x = (x[0] + k * u[0], x[1] + k * u[1])
            pts.append(x)
    return normalize_translation(convex_hull(pts, 2))


def minkowski_decompositions(base: LatticePolytope) -> list[MinkowskiDecomposition]:
    """All decompositions of a polygon into at least two non-point summands.

    Each summand uses a sub-multiset of the edge vectors of ``base`` that sums
    to zero; a decomposition is a partition of the full edge multiset into
    such closed pieces.  Summands are identified up to translation only.
    """
    edges = edge_sequence(base)
    dirs = [u for u, _ in edges]
    lengths = tuple(k for _, k in edges)
    closed = []
    for mu in product(*(range(k + 1) for k in lengths)):
        if any(mu) and mu != lengths and not any(
                sum(m * u[c] for m, u in zip(mu, dirs)) for c in (0, 1)):
            closed.append(mu)
    closed.sort(reverse=True)

    @lru_cache(maxsize=None)
    def parts(rem: tuple[int, ...], bound: int) -> list[tuple[tuple[int, ...], ...]]:
        if not any(rem):
            return [()]
        out = []
        for i in range(bound, len(closed)):
            mu = closed[i]
            if all(m <= r for m, r in zip(mu, rem)):
                rest = tuple(r - m for r, m in zip(rem, mu))
                for tail in parts(rest, i):
                    out.append((mu,) + tail)
        return out

    result = []
    for split in parts(lengths, 0):
        if len(split) < 2:
            continue
        summands = tuple(sorted((_polygon_from_edges(dirs, mu) for mu in split),
                                key=lambda S: S.vertices))
        result.append(MinkowskiDecomposition(base, summands))
    result.sort(key=lambda d: (d.r, [S.vertices for S in d.summands]))
    return result


def cayley(factors) -> LatticePolytope:
    """Cayley polytope ``conv(Δ_1 x {0}, Δ_2 x {e_1}, ..., Δ_r x {e_{r-1}})``.

    The result is charted onto a lattice basis of its affine span, so it is
    full-dimensional of dimension ``dim(Δ_1 + ... + Δ_r) + r - 1``.  A single
    factor is returned unchanged.
    """
    factors = list(factors)
    if not factors:
        raise PolytopeError("Cayley polytope of no factors")
    if len(factors) == 1:
        return factors[0]
    n = factors[0].dim_ambient
    if any(F.dim_ambient != n for F in factors):
        raise PolytopeError("Cayley factors live in different lattices")
    r = len(factors)
    pts = []
    for i, F in enumerate(factors):
        tail = tuple(int(j == i - 1) for j in range(r - 1))
        pts.extend(v + tail for v in F.vertices)
    P = convex_hull(pts, n + r - 1)
    if P.is_full_dimensional:
        return P
    return P.in_chart()


def pyramid(P: LatticePolytope, r: int = 1) -> LatticePolytope:
    """The ``r``-fold pyramid: ``P`` at height zero plus ``r`` unit apexes."""
    if r < 1:
        raise PolytopeError("pyramid needs r >= 1")
    n = P.dim_ambient
    point = convex_hull([(0,) * n], n)
    return cayley([P] + [point] * r)


def theta(d: int) -> LatticePolytope:
    """Cayley polytope of the ``2d`` segments ``[0, ±e_i]`` summing to ``[-1, 1]^d``."""
    if d < 1:
        raise PolytopeError("theta needs d >= 1")
    segs = []
    for i in range(d):
        e = tuple(int(j == i) for j in range(d))
        segs.append(convex_hull([(0,) * d, e], d))
        segs.append(convex_hull([(0,) * d, tuple(-x for x in e)], d))
    return cayley(segs)


def two_s3() -> LatticePolytope:
    """Twice the unit 3-simplex."""
    return simplex(3, 2)


__all__ = [
    "MinkowskiDecomposition", "cayley", "edge_sequence", "minkowski_decompositions",
    "minkowski_sum", "normalize_translation", "pyramid", "theta", "two_s3",
]
