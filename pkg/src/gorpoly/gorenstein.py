"""Reflexive and Gorenstein polytopes, cone duality, pyramids and vertex deletion.

A lattice polytope ``P`` of dimension ``n`` is Gorenstein of index ``r`` when
``rP`` is reflexive after a lattice translation.  Writing the facets of ``P``
as ``<a_i, x> >= c_i``, this means there is an integer point ``m`` with
``<a_i, m> = r c_i + 1`` for every facet.

The cone ``C_P`` over ``P x {1}`` has inner facet normals ``(a_i, -c_i)``.
These are the rays of the dual cone, and they all lie on the hyperplane
``<(m, r), y> = 1``.  The dual polytope ``P*`` is that slice, so its vertices
are in bijection with the facets of ``P`` (in the same order).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from gorpoly import intmat
from gorpoly.ehrhart import h_star
from gorpoly.polytope import Chart, Face, LatticePolytope, PolytopeError, convex_hull

Point = tuple[int, ...]


class NotGorensteinError(PolytopeError):
    """Raised when an operation needs a Gorenstein polytope."""


@dataclass(frozen=True)
class GorensteinCertificate:
    """Index, interior point and dual polytope of a Gorenstein polytope.

    ``dual.vertices[facet_to_dual_vertex[i]]`` is the vertex of ``P*`` dual to
    facet ``i`` of ``P``; ``vertex_to_dual_facet[j]`` is the index of the facet
    of ``P*`` dual to vertex ``j`` of ``P``.
    """

    index: int
    interior_point: Point
    dual: LatticePolytope
    facet_to_dual_vertex: tuple[int, ...]
    vertex_to_dual_facet: tuple[int, ...]
    face_duality: dict = field(repr=False, compare=False)
    cone_normal: Point
    dual_apex: Point

    @property
    def degree(self) -> int:
        return len(self.cone_normal) - self.index


@dataclass(frozen=True)
class PyramidStructure:
    apex: Point
    base: LatticePolytope
    folds: int


@lru_cache(maxsize=4096)
def _facet_system(P: LatticePolytope) -> tuple[tuple[int, ...], intmat.Matrix, int]:
    """Indices of ``n`` independent facets, with the adjugate and determinant of their normals."""
    chosen: list[int] = []
    rows: list[Point] = []
    for i, f in enumerate(P.facets):
        if intmat.rank(rows + [f.normal]) > len(rows):
            rows.append(f.normal)
            chosen.append(i)
            if len(rows) == P.dim:
                break
    return tuple(chosen), intmat.adjugate(rows), intmat.determinant(rows)


def _center_for(P: LatticePolytope, r: int) -> Point | None:
    """Integer ``m`` with every facet of ``rP`` at distance one, if any."""
    idx, adj, det = _facet_system(P)
    b = [r * P.facets[i].offset + 1 for i in idx]
    num = [intmat.dot(row, b) for row in adj]
    if any(x % det for x in num):
        return None
    m = tuple(x // det for x in num)
    if all(intmat.dot(f.normal, m) == r * f.offset + 1 for f in P.facets):
        return m
    return None


def reflexive_center(P: LatticePolytope) -> Point | None:
    """The unique interior point of a reflexive polytope, else ``None``."""
    P._require_full()
    return _center_for(P, 1)


def is_reflexive(P: LatticePolytope, check_counts: bool = False) -> bool:
    """Whether every facet lies at lattice distance one from an interior point.

    Args:
        P: A full-dimensional lattice polytope.
        check_counts: Also assert ``i(P, k) == |int((k+1)P) ∩ Z^n|`` for ``k = 0, 1, 2``.
    """
    m = reflexive_center(P)
    if check_counts and m is not None:
        for k in range(3):
            assert len(P.dilate_points(k)) == len(P.dilate_points(k + 1, strict=True))
    return m is not None


@lru_cache(maxsize=4096)
def _index_and_center(P: LatticePolytope) -> tuple[int, Point] | None:
    P._require_full()
    for r in range(1, P.dim + 2):
        m = _center_for(P, r)
        if m is not None:
            return r, m
    return None


def gorenstein_index(P: LatticePolytope, check_degree: bool = False) -> int | None:
    """The index ``r`` with ``rP`` reflexive, or ``None`` if ``P`` is not Gorenstein.

    Args:
        P: A full-dimensional lattice polytope.
        check_degree: Assert ``r == n + 1 - deg P`` using the h*-vector.
    """
    res = _index_and_center(P)
    if res is None:
        return None
    if check_degree:
        assert res[0] == P.dim + 1 - h_star(P).degree
    return res[0]


def is_gorenstein_degree2(P: LatticePolytope) -> bool:
    return P.is_full_dimensional and gorenstein_index(P) == P.dim - 1


def _slice_chart(apex: Point) -> list[list[int]]:
    """Unimodular ``W`` with ``(y @ W)[0] == <y, apex>``."""
    _, V = intmat.row_basis_chart([apex], len(apex))
    return intmat.transpose(intmat.unimodular_inverse(V))


@lru_cache(maxsize=4096)
def dual_gorenstein(P: LatticePolytope) -> GorensteinCertificate:
    """The dual Gorenstein polytope together with the face duality.

    Raises:
        NotGorensteinError: If ``P`` is not Gorenstein.
    """
    res = _index_and_center(P)
    if res is None:
        raise NotGorensteinError("polytope is not Gorenstein")
    r, m = res
    n = P.dim
    apex = m + (r,)
    rays = [f.normal + (-f.offset,) for f in P.facets]
    if any(intmat.dot(y, apex) != 1 for y in rays):
        raise AssertionError("dual cone is not Gorenstein")
    W = _slice_chart(apex)
    coords = [intmat.vecmat(y, W) for y in rays]
    assert all(c[0] == 1 for c in coords)
    pts = [c[1:] for c in coords]
    origin = min(pts)
    pts = [tuple(a - b for a, b in zip(p, origin)) for p in pts]
    dual = convex_hull(pts, n)
    pos = {v: i for i, v in enumerate(dual.vertices)}
    if len(pos) != len(pts) or any(p not in pos for p in pts):
        raise AssertionError("a dual ray is not a vertex of the slice")
    f2v = tuple(pos[p] for p in pts)

    def dual_mask(face_mask: int) -> int:
        out = 0
        for i in P.facets_containing(face_mask):
            out |= 1 << f2v[i]
        return out

    dual_faces = {f.mask: f for f in dual.face_lattice}
    duality = {F: dual_faces[dual_mask(F.mask)] for F in P.face_lattice}
    v2f = []
    dual_fmasks = dual.facet_masks
    for j in range(len(P.vertices)):
        target = dual_mask(1 << j)
        v2f.append(dual_fmasks.index(target))
    return GorensteinCertificate(
        index=r, interior_point=m, dual=dual, facet_to_dual_vertex=f2v,
        vertex_to_dual_facet=tuple(v2f), face_duality=duality,
        cone_normal=(0,) * n + (1,), dual_apex=apex)


def dual(P: LatticePolytope) -> LatticePolytope:
    return dual_gorenstein(P).dual


def cone_facet_normals(generators) -> set[Point] | None:
    """Primitive inner facet normals of the pointed cone spanned by ``generators``.

    Returns ``None`` if the cone is not full-dimensional.
    """
    gens = [tuple(g) for g in generators if any(g)]
    if not gens:
        return None
    n = len(gens[0])
    hull = convex_hull([(0,) * n] + gens, n)
    if not hull.is_full_dimensional:
        return None
    return {f.normal for f in hull.facets if f.offset == 0}


def vertex_cone_check(P: LatticePolytope, v: int, generators=None) -> bool:
    """Compare the cone at vertex ``v`` with the polar of the cone over its dual facet.

    Args:
        P: A Gorenstein polytope.
        v: Vertex index.
        generators: Override the cone generators ``{w - v : w in P ∩ Z^n}``.
            Used to build negative controls.

    Returns:
        True iff the facet normals of the cone at ``v`` are exactly the
        normals ``a_j`` of the facets dual to the vertices of the dual facet.
    """
    cert = dual_gorenstein(P)
    x = P.vertices[v]
    if generators is None:
        generators = [tuple(a - b for a, b in zip(w, x)) for w in P.lattice_points]
    normals = cone_facet_normals(generators)
    if normals is None:
        return False
    dual_facet = cert.dual.facet_masks[cert.vertex_to_dual_facet[v]]
    expected = {P.facets[i].normal for i in range(len(P.facets))
                if dual_facet >> cert.facet_to_dual_vertex[i] & 1}
    return normals == expected


def is_pyramid(P: LatticePolytope) -> PyramidStructure | None:
    """Find an apex at lattice height one over a facet containing all other vertices.

    The fold count is obtained by peeling the base repeatedly.
    """
    P._require_full()
    if P.dim == 0:
        return None
    full = (1 << len(P.vertices)) - 1
    for j, x in enumerate(P.vertices):
        rest = full & ~(1 << j)
        for f, mask in zip(P.facets, P.facet_masks):
            if mask == rest and f.value(x) == 1:
                base_pts = [P.vertices[i] for i in range(len(P.vertices)) if i != j]
                ch = Chart(base_pts, P.dim)
                base = convex_hull([ch.to_chart(p) for p in base_pts], ch.dim)
                inner = is_pyramid(base) if base.dim > 0 else None
                folds = 1 + (inner.folds if inner else 0)
                return PyramidStructure(x, base, folds)
    return None


def pyramid_folds(P: LatticePolytope) -> int:
    s = is_pyramid(P)
    return s.folds if s else 0


def _vertex_index(P: LatticePolytope, v) -> int:
    if isinstance(v, int):
        return v
    return P.vertices.index(tuple(v))


def delete_vertex(P: LatticePolytope, v) -> LatticePolytope:
    """``conv((P ∩ Z^n) minus {v})`` for a vertex ``v`` (index or coordinates).

    Raises:
        PolytopeError: If the result is lower-dimensional.
    """
    j = _vertex_index(P, v)
    x = P.vertices[j]
    Q = convex_hull([p for p in P.lattice_points if p != x], P.dim_ambient)
    if not Q.is_full_dimensional:
        raise PolytopeError(f"deleting {x} leaves a lower-dimensional polytope")
    return Q


def deletable_vertices(P: LatticePolytope, check_duality: bool = True) -> list[int]:
    """Indices of vertices whose deletion keeps ``P`` Gorenstein of degree two.

    Args:
        P: A Gorenstein polytope of degree two.
        check_duality: Assert that a vertex is deletable exactly when its dual
            facet is a basic simplex.
    """
    if not is_gorenstein_degree2(P):
        raise NotGorensteinError("deletion needs a Gorenstein polytope of degree 2")
    out = []
    cert = dual_gorenstein(P) if check_duality else None
    for j in range(len(P.vertices)):
        try:
            Q = delete_vertex(P, j)
            ok = is_gorenstein_degree2(Q)
        except PolytopeError:
            ok = False
        if cert is not None:
            mask = cert.dual.facet_masks[cert.vertex_to_dual_facet[j]]
            face = cert.dual.face_of(i for i in range(len(cert.dual.vertices)) if mask >> i & 1)
            basic = cert.dual.face_volume(face) == 1
            assert ok == basic, (P, j)
        if ok:
            out.append(j)
    return out


def is_minimal(P: LatticePolytope) -> bool:
    return not deletable_vertices(P)


def is_maximal(P: LatticePolytope) -> bool:
    return is_minimal(dual(P))


def facet_volume_sum(P: LatticePolytope) -> int:
    """Sum of the normalized volumes of all facets."""
    return sum(P.face_volume(F) for F in P.faces(P.dim - 1))


__all__ = [
    "GorensteinCertificate", "NotGorensteinError", "PyramidStructure",
    "cone_facet_normals", "delete_vertex", "deletable_vertices", "dual",
    "dual_gorenstein", "facet_volume_sum", "gorenstein_index", "is_gorenstein_degree2",
    "is_maximal", "is_minimal", "is_pyramid", "is_reflexive", "pyramid_folds",
    "reflexive_center", "vertex_cone_check",
]
