"""Lattice polytopes in exact integer arithmetic.

A :class:`LatticePolytope` keeps its vertices sorted lexicographically and, when
it is full-dimensional, its primitive inner facet normals.  Everything derived
from that double description (lattice points, faces, volumes) is cached.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from gorpoly import intmat
from gorpoly.intmat import dot, primitive

Point = tuple[int, ...]


class PolytopeError(ValueError):
    """Raised for malformed input or a violated precondition."""


@dataclass(frozen=True, order=True)
class FacetDescription:
    """The facet ``{x : <normal, x> = offset}`` of ``{x : <normal, x> >= offset}``."""

    normal: Point
    offset: int

    def value(self, x: Sequence[int]) -> int:
        """Lattice distance of ``x`` from the facet hyperplane."""
        return dot(self.normal, x) - self.offset


@dataclass(frozen=True, order=True)
class Face:
    """A face given by the indices of the vertices it contains."""

    dim: int
    vertices: tuple[int, ...]

    @property
    def mask(self) -> int:
        m = 0
        for i in self.vertices:
            m |= 1 << i
        return m


def _as_point(p, dim: int | None) -> Point:
    out = []
    for x in p:
        if isinstance(x, bool) or not isinstance(x, int):
            if hasattr(x, "__index__"):
                x = x.__index__()
            else:
                raise PolytopeError(f"non-integer coordinate {x!r}")
        out.append(int(x))
    if dim is not None and len(out) != dim:
        raise PolytopeError(f"point {tuple(out)} does not have length {dim}")
    return tuple(out)


class Chart:
    """Affine lattice isomorphism from ``aff(points) ∩ Z^n`` onto ``Z^k``."""

    def __init__(self, points: Sequence[Point], n: int):
        self.origin = points[0]
        diffs = [tuple(a - b for a, b in zip(p, self.origin)) for p in points[1:]]
        diffs = [d for d in diffs if any(d)]
        self.dim, self.matrix = intmat.row_basis_chart(diffs, n)
        self.n = n

    @cached_property
    def inverse(self) -> intmat.Matrix:
        return intmat.unimodular_inverse(self.matrix)

    def to_chart(self, x: Sequence[int]) -> Point:
        d = [a - b for a, b in zip(x, self.origin)]
        return intmat.vecmat(d, self.matrix)[: self.dim]

    def from_chart(self, y: Sequence[int]) -> Point:
        full = list(y) + [0] * (self.n - self.dim)
        d = intmat.vecmat(full, self.inverse)
        return tuple(a + b for a, b in zip(d, self.origin))


def _initial_simplex(pts: Sequence[Point], n: int) -> list[int]:
    chosen = [0]
    rows: list[list[int]] = []
    for i in range(1, len(pts)):
        d = [a - b for a, b in zip(pts[i], pts[0])]
        if intmat.rank(rows + [d]) > len(rows):
            rows.append(d)
            chosen.append(i)
            if len(chosen) == n + 1:
                break
    return chosen


def _double_description(pts: Sequence[Point], n: int) -> list[tuple[Point, int]]:
    """Facets ``(normal, offset)`` of the full-dimensional hull of ``pts``.

    Extreme rays of ``{y : <(p, 1), y> >= 0}`` are computed by the
    double-description method with the combinatorial adjacency test.
    """
    hom = [p + (1,) for p in pts]
    init = _initial_simplex(pts, n)
    a0 = [list(hom[i]) for i in init]
    det = intmat.determinant(a0)
    # Columns of the adjugate are the initial rays, tight everywhere but one row.
    rays: list[tuple[Point, int]] = []
    for j in range(n + 1):
        col = []
        for i in range(n + 1):
            minor = [row[:i] + row[i + 1:] for k, row in enumerate(a0) if k != j]
            col.append((-1) ** (i + j) * intmat.determinant(minor))
        y = primitive(col)
        if det < 0:
            y = tuple(-x for x in y)
        mask = 0
        for k, idx in enumerate(init):
            if k != j:
                mask |= 1 << idx
        rays.append((y, mask))
    rest = [i for i in range(len(pts)) if i not in set(init)]
    for idx in rest:
        h = hom[idx]
        vals = [dot(h, y) for y, _ in rays]
        if all(v >= 0 for v in vals):
            bit = 1 << idx
            rays = [(y, m | bit) if v == 0 else (y, m) for (y, m), v in zip(rays, vals)]
            continue
        pos = [i for i, v in enumerate(vals) if v > 0]
        neg = [i for i, v in enumerate(vals) if v < 0]
        zero = [i for i, v in enumerate(vals) if v == 0]
        new: list[tuple[Point, int]] = []
        bit = 1 << idx
        for i in pos:
            new.append(rays[i])
        for i in zero:
            new.append((rays[i][0], rays[i][1] | bit))
        masks = [m for _, m in rays]
        for i in pos:
            yi, mi = rays[i]
            for j in neg:
                yj, mj = rays[j]
                common = mi & mj
                if bin(common).count("1") < n - 1:
                    continue
                if any(k != i and k != j and (masks[k] & common) == common
                       for k in range(len(rays))):
                    continue
                vi, vj = vals[i], vals[j]
                y = primitive([vi * b - vj * a for a, b in zip(yi, yj)])
                new.append((y, common | bit))
        rays = new
    return sorted((y[:n], -y[n]) for y, _ in rays)


def _hull_1d(pts: Sequence[Point]) -> list[tuple[Point, int]]:
    lo = min(p[0] for p in pts)
    hi = max(p[0] for p in pts)
    return sorted([((1,), lo), ((-1,), -hi)])


def _full_hull(pts: Sequence[Point], n: int) -> tuple[list[Point], list[tuple[Point, int]]]:
    facets = _hull_1d(pts) if n == 1 else _double_description(pts, n)
    tight = []
    for p in pts:
        m = 0
        for f, (a, c) in enumerate(facets):
            if dot(a, p) == c:
                m |= 1 << f
        tight.append(m)
    verts = []
    for i, p in enumerate(pts):
        mi = tight[i]
        if not any(j != i and (tight[j] & mi) == mi for j in range(len(pts))):
            verts.append(p)
    return sorted(verts), facets


def _enumerate_points(levels: Sequence[Sequence[tuple[Point, int]]], scale: int,
                      strict: bool = False, count_only: bool = False):
    """Integer points of ``scale * P`` by depth-first search over coordinates.

    ``levels[k]`` lists inequalities ``<a, x[:k+1]> >= c`` cutting out the
    projection of ``P`` onto its first ``k + 1`` coordinates, so every partial
    point visited lies in the projection of ``scale * P``.  Only the last
    level is made strict when ``strict`` is set.  With ``count_only`` the
    number of points is returned instead of the list.
    """
    n = len(levels)
    if n == 0:
        return 1 if count_only else [()]
    last = n - 1
    scaled = [[(a, scale * c + (1 if strict and k == last else 0)) for a, c in lev]
              for k, lev in enumerate(levels)]
    out: list[Point] = []
    total = 0
    x = [0] * n

    def rec(k: int):
        nonlocal total
        lo_k = hi_k = None
        for a, c in scaled[k]:
            need = c - sum(a[j] * x[j] for j in range(k))
            ak = a[k]
            if ak > 0:
                b = -((-need) // ak)
                if lo_k is None or b > lo_k:
                    lo_k = b
            elif ak < 0:
                b = need // ak
                if hi_k is None or b < hi_k:
                    hi_k = b
            elif need > 0:
                return
        if lo_k > hi_k:
            return
        if k == last:
            if count_only:
                total += hi_k - lo_k + 1
            else:
                head = tuple(x[:last])
                out.extend(head + (v,) for v in range(lo_k, hi_k + 1))
            return
        for v in range(lo_k, hi_k + 1):
            x[k] = v
            rec(k + 1)

    rec(0)
    return total if count_only else out


class LatticePolytope:
    """Convex hull of finitely many points of ``Z^n``.

    Build instances with :func:`convex_hull`.  Vertices are sorted, facets are
    sorted, and the object is treated as immutable.
    """

    def __init__(self, vertices: Sequence[Point], facets: Sequence[FacetDescription],
                 dim_affine: int, dim_ambient: int):
        self.vertices: tuple[Point, ...] = tuple(vertices)
        self.facets: tuple[FacetDescription, ...] = tuple(facets)
        self.dim_affine = dim_affine
        self.dim_ambient = dim_ambient

    # -- basic protocol ------------------------------------------------
    def __repr__(self) -> str:
        return (f"LatticePolytope(dim={self.dim_affine}, ambient={self.dim_ambient}, "
                f"vertices={list(self.vertices)})")

    def __eq__(self, other) -> bool:
        return (isinstance(other, LatticePolytope)
                and self.dim_ambient == other.dim_ambient
                and self.vertices == other.vertices)

    def __hash__(self) -> int:
        return hash((self.dim_ambient, self.vertices))

    @property
    def dim(self) -> int:
        return self.dim_affine

    @property
    def is_full_dimensional(self) -> bool:
        return self.dim_affine == self.dim_ambient

    def _require_full(self):
        if not self.is_full_dimensional:
            raise PolytopeError("polytope is not full-dimensional")

    # -- incidences ----------------------------------------------------
    @cached_property
    def facet_masks(self) -> tuple[int, ...]:
        """Bitmask of incident vertices for each facet."""
        out = []
        for f in self.facets:
            m = 0
            for i, v in enumerate(self.vertices):
                if f.value(v) == 0:
                    m |= 1 << i
            out.append(m)
        return tuple(out)

    def facets_containing(self, vertex_mask: int) -> list[int]:
        return [i for i, m in enumerate(self.facet_masks) if m & vertex_mask == vertex_mask]

    @cached_property
    def chart(self) -> Chart:
        return Chart(self.vertices, self.dim_ambient)

    # -- lattice points --------------------------------------------------
    @cached_property
    def _projection_levels(self) -> tuple[tuple[tuple[Point, int], ...], ...]:
        """Facet inequalities of the projections onto each coordinate prefix."""
        n = self.dim_ambient
        levels = []
        for k in range(1, n):
            pts = sorted({v[:k] for v in self.vertices})
            levels.append(tuple(_full_hull(pts, k)[1]))
        levels.append(tuple((f.normal, f.offset) for f in self.facets))
        return tuple(levels)

    def dilate_points(self, k: int, strict: bool = False) -> list[Point]:
        """Lattice points of ``kP`` (relative interior ones if ``strict``)."""
        if k < 0:
            raise PolytopeError("dilation factor must be nonnegative")
        if k == 0:
            return [] if strict and self.dim_affine > 0 else [(0,) * self.dim_ambient]
        if self.is_full_dimensional:
            return _enumerate_points(self._projection_levels, k, strict)
        inner = self.in_chart()
        ch = self.chart
        origin_k = tuple(k * x for x in ch.origin)
        pts = inner.dilate_points(k, strict)
        out = []
        for y in pts:
            full = list(y) + [0] * (ch.n - ch.dim)
            d = intmat.vecmat(full, ch.inverse)
            out.append(tuple(a + b for a, b in zip(d, origin_k)))
        return sorted(out)

    def count_dilate_points(self, k: int, strict: bool = False) -> int:
        """Number of lattice points of ``kP`` (relative interior if ``strict``)."""
        if k < 0:
            raise PolytopeError("dilation factor must be nonnegative")
        if k == 0 or not self.is_full_dimensional:
            return len(self.dilate_points(k, strict))
        return _enumerate_points(self._projection_levels, k, strict, count_only=True)

    @cached_property
    def lattice_points(self) -> tuple[Point, ...]:
        return tuple(sorted(self.dilate_points(1)))

    @cached_property
    def interior_lattice_points(self) -> tuple[Point, ...]:
        self._require_full()
        return tuple(sorted(self.dilate_points(1, strict=True)))

    def in_chart(self) -> "LatticePolytope":
        """This polytope as a full-dimensional polytope in ``Z^dim``."""
        if self.is_full_dimensional:
            return self
        ch = self.chart
        return convex_hull([ch.to_chart(v) for v in self.vertices], ch.dim)

    # -- faces -----------------------------------------------------------
    def _affine_rank(self, mask: int) -> int:
        idx = [i for i in range(len(self.vertices)) if mask >> i & 1]
        if not idx:
            return -1
        v0 = self.vertices[idx[0]]
        rows = [[a - b for a, b in zip(self.vertices[i], v0)] for i in idx[1:]]
        return intmat.rank(rows)

    @cached_property
    def face_lattice(self) -> tuple[Face, ...]:
        """All faces including the empty face and the polytope itself."""
        self._require_full()
        full = (1 << len(self.vertices)) - 1
        seen = {full}
        frontier = set(self.facet_masks)
        seen |= frontier
        while frontier:
            nxt = set()
            for a in frontier:
                for b in self.facet_masks:
                    c = a & b
                    if c not in seen:
                        seen.add(c)
                        nxt.add(c)
            frontier = nxt
        seen.add(0)
        faces = []
        for m in seen:
            idx = tuple(i for i in range(len(self.vertices)) if m >> i & 1)
            faces.append(Face(self._affine_rank(m), idx))
        return tuple(sorted(faces))

    def faces(self, k: int) -> list[Face]:
        if not -1 <= k <= self.dim_affine:
            raise PolytopeError(f"face dimension {k} out of range")
        return [f for f in self.face_lattice if f.dim == k]

    @cached_property
    def f_vector(self) -> tuple[int, ...]:
        counts = [0] * (self.dim_affine + 2)
        for f in self.face_lattice:
            counts[f.dim + 1] += 1
        return tuple(counts)

    def face_of(self, vertex_indices: Iterable[int]) -> Face:
        idx = tuple(sorted(vertex_indices))
        for f in self.face_lattice:
            if f.vertices == idx:
                return f
        raise PolytopeError(f"{idx} is not a face")

    # -- triangulation and volume -----------------------------------------
    @cached_property
    def _faces_by_dim(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for f in self.face_lattice:
            out.setdefault(f.dim, []).append(f.mask)
        return out

    def placing_triangulation(self, face: Face | None = None) -> list[tuple[int, ...]]:
        """Placing triangulation of a face (default: the whole polytope).

        Simplices are tuples of vertex indices.  The apex of each cone is the
        lowest-index vertex of the face being triangulated.
        """
        if face is None:
            face = Face(self.dim_affine, tuple(range(len(self.vertices))))
        memo: dict[int, list[tuple[int, ...]]] = {}
        dims = {f.mask: f.dim for f in self.face_lattice}
        by_dim = self._faces_by_dim

        def tri(mask: int) -> list[tuple[int, ...]]:
            if mask in memo:
                return memo[mask]
            d = dims[mask]
            apex = (mask & -mask).bit_length() - 1
            if d == 0:
                res = [(apex,)]
            else:
                res = []
                for g in by_dim.get(d - 1, ()):
                    if g & mask == g and not g >> apex & 1:
                        res.extend(s + (apex,) for s in tri(g))
            memo[mask] = res
            return res

        return [tuple(sorted(s)) for s in tri(face.mask)]

    @cached_property
    def normalized_volume(self) -> int:
        self._require_full()
        if self.dim_affine == 0:
            return 1
        total = 0
        for s in self.placing_triangulation():
            v0 = self.vertices[s[0]]
            rows = [[a - b for a, b in zip(self.vertices[i], v0)] for i in s[1:]]
            total += abs(intmat.determinant(rows))
        return total

    def face_volume(self, face: Face) -> int:
        """Normalized volume of a face in the lattice of its affine hull."""
        if face.dim <= 0:
            return 1 if face.dim == 0 else 0
        pts = [self.vertices[i] for i in face.vertices]
        if face.dim == 1:
            return intmat.gcd_all(a - b for a, b in zip(pts[0], pts[1]))
        if face.dim == self.dim_affine:
            return self.normalized_volume
        ch = Chart(pts, self.dim_ambient)
        total = 0
        for s in self.placing_triangulation(face):
            ys = [ch.to_chart(self.vertices[i]) for i in s]
            rows = [[a - b for a, b in zip(y, ys[0])] for y in ys[1:]]
            total += abs(intmat.determinant(rows))
        return total

    @cached_property
    def _point_tight_masks(self) -> dict[Point, int]:
        out = {}
        for p in self.lattice_points:
            m = 0
            for i, f in enumerate(self.facets):
                if f.value(p) == 0:
                    m |= 1 << i
            out[p] = m
        return out

    def face_interior_count(self, face: Face) -> int:
        """Lattice points in the relative interior of ``face``."""
        target = 0
        for i in self.facets_containing(face.mask):
            target |= 1 << i
        return sum(1 for m in self._point_tight_masks.values() if m == target)

    def lattice_points_on(self, face: Face) -> list[Point]:
        target = 0
        for i in self.facets_containing(face.mask):
            target |= 1 << i
        return [p for p, m in self._point_tight_masks.items() if m & target == target]

    # -- transformations ---------------------------------------------------
    def dilate(self, k: int) -> "LatticePolytope":
        if k <= 0:
            raise PolytopeError("dilation factor must be positive")
        return LatticePolytope(
            [tuple(k * x for x in v) for v in self.vertices],
            [FacetDescription(f.normal, k * f.offset) for f in self.facets],
            self.dim_affine, self.dim_ambient)

    def translate(self, t: Sequence[int]) -> "LatticePolytope":
        t = _as_point(t, self.dim_ambient)
        return LatticePolytope(
            sorted(tuple(a + b for a, b in zip(v, t)) for v in self.vertices),
            sorted(FacetDescription(f.normal, f.offset + dot(f.normal, t)) for f in self.facets),
            self.dim_affine, self.dim_ambient)

    def transform(self, u: Sequence[Sequence[int]]) -> "LatticePolytope":
        """Image under ``x -> x @ u`` for a unimodular matrix ``u``."""
        return convex_hull([intmat.vecmat(v, u) for v in self.vertices], self.dim_ambient)


def convex_hull(points: Iterable[Sequence[int]], dim: int | None = None) -> LatticePolytope:
    """Convex hull of lattice points.

    Facets are computed exactly when the hull is full-dimensional in ``Z^dim``;
    for lower-dimensional hulls the vertex set is found in a lattice chart of
    the affine span and the facet list stays empty.
    """
    pts_in = list(points)
    if not pts_in:
        raise PolytopeError("convex hull of an empty point set")
    if dim is None:
        dim = len(pts_in[0])
    pts = sorted({_as_point(p, dim) for p in pts_in})
    if dim == 0:
        return LatticePolytope([()], [], 0, 0)
    ch = Chart(pts, dim)
    k = ch.dim
    if k == 0:
        return LatticePolytope(pts, [], 0, dim)
    if k == dim:
        verts, facets = _full_hull(pts, dim)
        return LatticePolytope(verts, [FacetDescription(a, c) for a, c in facets], dim, dim)
    local = [ch.to_chart(p) for p in pts]
    lverts, _ = _full_hull(sorted(set(local)), k)
    keep = set(lverts)
    verts = sorted(p for p, y in zip(pts, local) if y in keep)
    return LatticePolytope(verts, [], k, dim)


def lattice_points(P: LatticePolytope) -> list[Point]:
    return list(P.lattice_points)


def interior_lattice_points(P: LatticePolytope) -> list[Point]:
    return list(P.interior_lattice_points)


def normalized_volume(P: LatticePolytope) -> int:
    return P.normalized_volume


def faces(P: LatticePolytope, k: int) -> list[Face]:
    return P.faces(k)


def f_vector(P: LatticePolytope) -> tuple[int, ...]:
    return P.f_vector


def face_volume(P: LatticePolytope, F: Face) -> int:
    return P.face_volume(F)


def face_interior_count(P: LatticePolytope, F: Face) -> int:
    return P.face_interior_count(F)


def simplex(n: int, scale: int = 1) -> LatticePolytope:
    """``scale`` times the standard unit ``n``-simplex."""
    pts = [(0,) * n] + [tuple(scale * int(i == j) for j in range(n)) for i in range(n)]
    return convex_hull(pts, n)


def cube(n: int, lo: int = 0, hi: int = 1) -> LatticePolytope:
    from itertools import product
    return convex_hull(product((lo, hi), repeat=n), n)


__all__ = [
    "Chart", "Face", "FacetDescription", "LatticePolytope", "PolytopeError",
    "convex_hull", "cube", "f_vector", "face_interior_count", "face_volume",
    "faces", "interior_lattice_points", "lattice_points", "normalized_volume",
    "simplex",
]
