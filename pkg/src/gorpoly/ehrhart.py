"""Ehrhart counts, h*-vectors and the structure of polytopes of degree at most one."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from gorpoly import intmat
from gorpoly.normal_form import are_isomorphic
from gorpoly.polytope import LatticePolytope, PolytopeError, convex_hull

BASIC_SIMPLEX = "BasicSimplex"
EXCEPTIONAL_SIMPLEX = "ExceptionalSimplex"
LAWRENCE_PRISM = "LawrencePrism"


@dataclass(frozen=True)
class HStarData:
    dim: int
    counts: tuple[int, ...]
    hstar: tuple[int, ...]
    degree: int
    normalized_volume: int


@dataclass(frozen=True)
class Degree1Structure:
    kind: str
    heights: tuple[int, ...] | None = None
    direction: tuple[int, ...] | None = None


def ehrhart_count(P: LatticePolytope, k: int) -> int:
    """Number of lattice points in ``kP``.

    Args:
        P: A full-dimensional lattice polytope.
        k: Nonnegative dilation factor.

    Returns:
        ``|kP ∩ Z^n|``.

    Raises:
        PolytopeError: If ``k`` is negative; use :func:`ehrhart_reciprocal`.
    """
    if k < 0:
        raise PolytopeError("negative dilation; use ehrhart_reciprocal")
    P._require_full()
    if k == 1:
        return len(P.lattice_points)
    return P.count_dilate_points(k)


def ehrhart_reciprocal(P: LatticePolytope, k: int) -> int:
    """Value of the Ehrhart polynomial at ``-k`` for ``k >= 1``, via interior counts."""
    if k < 1:
        raise PolytopeError("reciprocity accessor needs k >= 1")
    P._require_full()
    return (-1) ** P.dim * P.count_dilate_points(k, strict=True)


def h_star(P: LatticePolytope) -> HStarData:
    """h*-vector from the counts ``i(P, 0), ..., i(P, n)``."""
    P._require_full()
    n = P.dim
    counts = tuple(ehrhart_count(P, k) for k in range(n + 1))
    h = tuple(sum((-1) ** i * comb(n + 1, i) * counts[j - i] for i in range(j + 1))
              for j in range(n + 1))
    degree = max(j for j in range(n + 1) if h[j])
    return HStarData(n, counts, h, degree, sum(h))


def ehrhart_from_hstar(hstar, k: int) -> int:
    """Evaluate ``i(P, k) = sum_j h*_j binom(n + k - j, n)``."""
    n = len(hstar) - 1
    return sum(hj * comb(n + k - j, n) for j, hj in enumerate(hstar) if n + k - j >= 0)


def _exceptional(n: int) -> LatticePolytope:
    pts = [(0,) * n, tuple(2 * int(j == 0) for j in range(n)),
           tuple(2 * int(j == 1) for j in range(n))]
    pts += [tuple(int(j == i) for j in range(n)) for i in range(2, n)]
    return convex_hull(pts, n)


def lawrence_prism(heights) -> LatticePolytope:
    """``conv{0, θ1 e_n, e_1, e_1 + θ2 e_n, ..., e_{n-1}, e_{n-1} + θn e_n}``."""
    n = len(heights)
    top = tuple(int(j == n - 1) for j in range(n))
    pts = []
    for i, t in enumerate(heights):
        base = (0,) * n if i == 0 else tuple(int(j == i - 1) for j in range(n))
        pts.append(base)
        pts.append(tuple(b + t * e for b, e in zip(base, top)))
    return convex_hull(pts, n)


def _prism_heights(P: LatticePolytope, u: tuple[int, ...]):
    """Heights if ``P`` is a Lawrence prism with direction ``u``, else ``None``."""
    n = P.dim
    _, V = intmat.row_basis_chart([u], n)
    coords = [intmat.vecmat(v, V) for v in P.vertices]
    fibres: dict[tuple[int, ...], list[int]] = {}
    for c in coords:
        fibres.setdefault(c[1:], []).append(c[0])
    base = sorted(fibres)
    if len(base) != n:
        return None
    # The projection must be a unimodular simplex.
    rows = [[a - b for a, b in zip(p, base[0])] for p in base[1:]]
    if rows and abs(intmat.determinant(rows)) != 1:
        return None
    return tuple(max(fibres[b]) - min(fibres[b]) for b in base)


def degree_le1_structure(P: LatticePolytope) -> Degree1Structure | None:
    """Recognise basic simplices, exceptional simplices and Lawrence prisms.

    Returns ``None`` when ``P`` has degree at least two.
    """
    data = h_star(P)
    if data.degree >= 2:
        return None
    n = P.dim
    if data.normalized_volume == 1:
        return Degree1Structure(BASIC_SIMPLEX)
    verts = P.vertices
    directions = set()
    for f in P.faces(1):
        a, b = verts[f.vertices[0]], verts[f.vertices[1]]
        d = intmat.primitive([x - y for x, y in zip(b, a)])
        if d < tuple(-x for x in d):
            d = tuple(-x for x in d)
        directions.add(d)
    for u in sorted(directions):
        hs = _prism_heights(P, u)
        if hs is not None:
            assert data.hstar[1] == sum(hs) - 1
            return Degree1Structure(LAWRENCE_PRISM, hs, u)
    if n >= 2 and len(verts) == n + 1 and data.normalized_volume == 4:
        if are_isomorphic(P, _exceptional(n)):
            return Degree1Structure(EXCEPTIONAL_SIMPLEX)
    raise AssertionError(f"degree {data.degree} polytope with no recognised structure")


__all__ = [
    "BASIC_SIMPLEX", "Degree1Structure", "EXCEPTIONAL_SIMPLEX", "HStarData",
    "LAWRENCE_PRISM", "degree_le1_structure", "ehrhart_count", "ehrhart_from_hstar",
    "ehrhart_reciprocal", "h_star", "lawrence_prism",
]
