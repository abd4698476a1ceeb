"""Slow, independent reference implementations used to cross-check the package.

Nothing here calls into the package's hull, normal-form or decomposition code;
only plain vertex lists go in and plain Python values come out.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations, product


def solve(a, b):
    """Solve the square system ``a x = b`` over Q; ``None`` if singular."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(a, b)]
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return None
        m[c], m[piv] = m[piv], m[c]
        for i in range(n):
            if i != c and m[i][c] != 0:
                f = m[i][c] / m[c][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return [m[i][n] / m[i][i] for i in range(n)]


def det(a) -> int:
    """Exact integer determinant by cofactor expansion (matrices here are at most 4x4)."""
    n = len(a)
    if n == 0:
        return 1
    if n == 1:
        return a[0][0]
    if n == 2:
        return a[0][0] * a[1][1] - a[0][1] * a[1][0]
    return sum((-1) ** j * a[0][j] * det([row[:j] + row[j + 1:] for row in a[1:]])
               for j in range(n) if a[0][j])


def inverse(a):
    n = len(a)
    cols = [solve(a, [int(i == j) for i in range(n)]) for j in range(n)]
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def in_convex_hull(p, pts) -> bool:
    """Carathéodory search: is ``p`` a convex combination of ``pts``?"""
    pts = list(pts)
    if not pts:
        return False
    n = len(p)
    if tuple(p) in map(tuple, pts):
        return True
    for size in range(2, min(n + 1, len(pts)) + 1):
        for sub in combinations(pts, size):
            base = sub[0]
            # least-squares free: pick size-1 coordinates forming a square system
            diffs = [[q[i] - base[i] for q in sub[1:]] for i in range(n)]
            rhs = [p[i] - base[i] for i in range(n)]
            for rows in combinations(range(n), size - 1):
                lam = solve([diffs[r] for r in rows], [rhs[r] for r in rows])
                if lam is None:
                    continue
                if any(sum(d * x for d, x in zip(diffs[i], lam)) != rhs[i] for i in range(n)):
                    break
                if all(x >= 0 for x in lam) and sum(lam) <= 1:
                    return True
                break
    return False


def brute_vertices(points) -> set[tuple[int, ...]]:
    pts = sorted(set(map(tuple, points)))
    return {p for p in pts if not in_convex_hull(p, [q for q in pts if q != p])}


def affine_rank(points) -> int:
    pts = list(points)
    if not pts:
        return -1
    rows = [[a - b for a, b in zip(p, pts[0])] for p in pts[1:]]
    for k in range(len(pts[0]), 0, -1):
        for rs in combinations(rows, k):
            for cs in combinations(range(len(pts[0])), k):
                if det([[row[c] for c in cs] for row in rs]):
                    return k
    return 0


def brute_isomorphic(P_verts, Q_verts) -> bool:
    """Search for an affine unimodular map taking one vertex set onto the other.

    Fix an affine basis among the vertices of ``P``, try every ordered tuple of
    vertices of ``Q`` as its image, and check the induced map.
    """
    P = [tuple(v) for v in P_verts]
    Q = set(tuple(v) for v in Q_verts)
    if len(P) != len(Q):
        return False
    n = len(P[0])
    basis = None
    for sub in combinations(range(1, len(P)), n):
        m = [[P[i][c] - P[0][c] for c in range(n)] for i in sub]
        if det(m):
            basis = (0,) + sub
            break
    if basis is None:
        raise ValueError("oracle needs full-dimensional input")
    src = [[P[i][c] - P[0][c] for c in range(n)] for i in basis[1:]]
    d_src = abs(det(src))
    src_inv = inverse(src)
    for img in permutations(sorted(Q), n + 1):
        dst = [[img[k][c] - img[0][c] for c in range(n)] for k in range(1, n + 1)]
        if abs(det(dst)) != d_src:
            continue
        # A with src @ A = dst
        A = [[sum(src_inv[r][k] * dst[k][c] for k in range(n)) for c in range(n)]
             for r in range(n)]
        if any(x.denominator != 1 for row in A for x in row):
            continue
        A = [[int(x) for x in row] for row in A]
        if abs(det(A)) != 1:
            continue
        image = set()
        for v in P:
            w = tuple(int(img[0][c] + sum((v[r] - P[0][r]) * A[r][c] for r in range(n)))
                      for c in range(n))
            image.add(w)
        if image == Q:
            return True
    return False


def box_points(vertices, inequalities, strict=False):
    """Lattice points of the bounding box satisfying ``<a, x> >= c`` (or ``>``)."""
    n = len(vertices[0])
    lo = [min(v[i] for v in vertices) for i in range(n)]
    hi = [max(v[i] for v in vertices) for i in range(n)]
    out = []
    for x in product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        vals = [sum(p * q for p, q in zip(a, x)) - c for a, c in inequalities]
        if all(v > 0 if strict else v >= 0 for v in vals):
            out.append(x)
    return out


def hull_lattice_points(vertices):
    """Lattice points of ``conv(vertices)`` by bounding-box scan and hull membership."""
    n = len(vertices[0])
    lo = [min(v[i] for v in vertices) for i in range(n)]
    hi = [max(v[i] for v in vertices) for i in range(n)]
    return [x for x in product(*(range(a, b + 1) for a, b in zip(lo, hi)))
            if in_convex_hull(x, vertices)]


def brute_hnf_2x2(a, bound=4):
    """All row-style HNFs ``U a`` with ``U`` unimodular and entries in ``[-bound, bound]``."""
    found = set()
    rng = range(-bound, bound + 1)
    for u in product(rng, repeat=4):
        if abs(u[0] * u[3] - u[1] * u[2]) != 1:
            continue
        h = [[u[0] * a[0][0] + u[1] * a[1][0], u[0] * a[0][1] + u[1] * a[1][1]],
             [u[2] * a[0][0] + u[3] * a[1][0], u[2] * a[0][1] + u[3] * a[1][1]]]
        if h[1][0] == 0 and h[0][0] > 0 and h[1][1] > 0 and 0 <= h[0][1] < h[1][1]:
            found.add(tuple(map(tuple, h)))
    return found


# -- Minkowski summands of polygons ---------------------------------------

def _hull2(points):
    """Vertices of a planar point set, sorted (monotone chain)."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return tuple(pts)

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return tuple(sorted(set(lower[:-1] + upper[:-1])))


def _normalized(verts):
    o = min(verts)
    return tuple(sorted((v[0] - o[0], v[1] - o[1]) for v in verts))


def _msum(A, B):
    return _hull2([(a[0] + b[0], a[1] + b[1]) for a in A for b in B])


def _inside(p, verts):
    """Point-in-convex-polygon test for a sorted vertex tuple (any dimension <= 2)."""
    return in_convex_hull(p, verts)


def _lattice_points2(verts):
    xs = [v[0] for v in verts]
    ys = [v[1] for v in verts]
    return [(x, y) for x in range(min(xs), max(xs) + 1) for y in range(min(ys), max(ys) + 1)
            if _inside((x, y), verts)]


def brute_summands(verts):
    """Map ``A -> B`` over non-point lattice summands ``A`` with ``A + B == base``."""
    base = _hull2(verts)
    pts = _lattice_points2(base)
    cands = set()
    for k in range(2, len(pts) + 1):
        for sub in combinations(pts, k):
            h = _hull2(sub)
            if len(h) >= 2:
                cands.add(_normalized(h))
    out = {}
    for A in cands:
        # B = {x : x + A inside base}, searched among translates of base points
        B = [x for x in {(p[0] - A[0][0], p[1] - A[0][1]) for p in pts}
             if all(_inside((x[0] + a[0], x[1] + a[1]), base) for a in A)]
        if not B:
            continue
        Bh = _hull2(B)
        if _msum(A, Bh) == base:
            out[A] = _normalized(Bh)
    return out


def brute_decompositions(verts):
    """All multisets (r >= 2) of non-point summands adding up to the polygon, up to translation."""
    memo = {}

    def rec(base):
        if base in memo:
            return memo[base]
        res = set()
        for A, B in brute_summands(base).items():
            if len(B) < 2:
                continue
            res.add(tuple(sorted((A, B))))
            for d in rec(B):
                res.add(tuple(sorted((A,) + d)))
        memo[base] = res
        return res

    return rec(_normalized(_hull2(verts)))
