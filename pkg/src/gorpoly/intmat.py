"""Exact integer linear algebra on plain Python ``int`` matrices.

Matrices are lists of rows.  Nothing here touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(a: Sequence[Sequence[int]]) -> Matrix:
    return [list(col) for col in zip(*a)]


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def vecmat(v: Sequence[int], m: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Row vector times matrix."""
    n = len(m[0]) if m else 0
    out = [0] * n
    for x, row in zip(v, m):
        if x:
            for j in range(n):
                out[j] += x * row[j]
    return tuple(out)


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(u, v))


def gcd_all(values) -> int:
    g = 0
    for x in values:
        g = gcd(g, x)
    return g


def primitive(v: Sequence[int]) -> tuple[int, ...]:
    g = gcd_all(v)
    if g == 0:
        return tuple(v)
    return tuple(x // g for x in v)


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``s*a + t*b == g == gcd(a, b) >= 0``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def determinant(a: Sequence[Sequence[int]]) -> int:
    """Bareiss fraction-free determinant."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(r) for r in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def rank(a: Sequence[Sequence[int]]) -> int:
    rows = [list(r) for r in a if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r]
        for i in range(r + 1, len(rows)):
            f = rows[i][c]
            if f:
                rows[i] = [x * p[c] - f * y for x, y in zip(rows[i], p)]
        r += 1
        if r == len(rows):
            break
    return r


def adjugate(a: Sequence[Sequence[int]]) -> Matrix:
    """Integer adjugate, so that ``adjugate(a) @ a == det(a) * I``."""
    n = len(a)
    if n == 1:
        return [[1]]
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [row[:j] + row[j + 1:] for k, row in enumerate(a) if k != i]
            out[j][i] = (-1) ** (i + j) * determinant(minor)
    return out


def solve_rational(a: Sequence[Sequence[int]], b: Sequence[int]):
    """Solve the square system ``a x = b`` over Q; ``None`` if singular."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(a, b)]
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return None
        m[c], m[piv] = m[piv], m[c]
        p = m[c][c]
        m[c] = [x / p for x in m[c]]
        for i in range(n):
            if i != c and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return [row[n] for row in m]


def nullspace_vector(rows: Sequence[Sequence[int]], ncols: int) -> tuple[int, ...] | None:
    """Primitive integer vector spanning the kernel of a rank ``ncols-1`` matrix.

    Returns ``None`` when the kernel is not one-dimensional.
    """
    m = [[Fraction(x) for x in r] for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        m[r] = [x / p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    if len(free) != 1:
        return None
    f = free[0]
    vec = [Fraction(0)] * ncols
    vec[f] = Fraction(1)
    for i, c in enumerate(pivots):
        vec[c] = -m[i][f]
    den = 1
    for x in vec:
        den = den * x.denominator // gcd(den, x.denominator)
    return primitive([int(x * den) for x in vec])


def hermite_normal_form(a: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix]:
    """Row-style Hermite normal form.

    Returns ``(H, U)`` with ``U`` unimodular and ``H == U @ a``.  ``H`` is in
    row echelon form, every pivot is positive, and the entries above a pivot
    lie in ``[0, pivot)``.  Zero rows are at the bottom.
    """
    h = [list(r) for r in a]
    m = len(h)
    n = len(h[0]) if m else 0
    u = identity(m)
    r = 0
    for c in range(n):
        if r == m:
            break
        # Euclid down column c on rows r..m-1.
        for i in range(r + 1, m):
            if h[i][c] == 0:
                continue
            g, s, t = xgcd(h[r][c], h[i][c])
            p, q = h[r][c] // g, h[i][c] // g
            hr, hi = h[r], h[i]
            ur, ui = u[r], u[i]
            h[r] = [s * x + t * y for x, y in zip(hr, hi)]
            h[i] = [-q * x + p * y for x, y in zip(hr, hi)]
            u[r] = [s * x + t * y for x, y in zip(ur, ui)]
            u[i] = [-q * x + p * y for x, y in zip(ur, ui)]
        if h[r][c] == 0:
            continue
        if h[r][c] < 0:
            h[r] = [-x for x in h[r]]
            u[r] = [-x for x in u[r]]
        piv = h[r][c]
        for i in range(r):
            q = h[i][c] // piv
            if q:
                h[i] = [x - q * y for x, y in zip(h[i], h[r])]
                u[i] = [x - q * y for x, y in zip(u[i], u[r])]
        r += 1
    return h, u


def smith_normal_form(a: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix, Matrix]:
    """Smith normal form ``(S, U, V)`` with ``S == U @ a @ V``.

    ``S`` is diagonal with nonnegative entries, each dividing the next.
    """
    s = [list(r) for r in a]
    m = len(s)
    n = len(s[0]) if m else 0
    u = identity(m)
    v = identity(n)

    def row_op(i, j, p, q, r_, t):
        # rows (i, j) <- (p*row_i + q*row_j, r_*row_i + t*row_j)
        for mat in (s, u):
            ri, rj = mat[i], mat[j]
            mat[i] = [p * x + q * y for x, y in zip(ri, rj)]
            mat[j] = [r_ * x + t * y for x, y in zip(ri, rj)]

    def col_op(i, j, p, q, r_, t):
        for mat in (s, v):
            for row in mat:
                x, y = row[i], row[j]
                row[i] = p * x + q * y
                row[j] = r_ * x + t * y

    for k in range(min(m, n)):
        while True:
            # Bring the smallest nonzero entry of the trailing block to (k, k).
            best = None
            for i in range(k, m):
                for j in range(k, n):
                    if s[i][j] and (best is None or abs(s[i][j]) < abs(s[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                return s, u, v
            i, j = best
            if i != k:
                s[k], s[i] = s[i], s[k]
                u[k], u[i] = u[i], u[k]
            if j != k:
                for mat in (s, v):
                    for row in mat:
                        row[k], row[j] = row[j], row[k]
            done = True
            # Exact quotients first, so a pivot that divides leaves column k intact.
            for i in range(k + 1, m):
                if s[i][k] and s[i][k] % s[k][k] == 0:
                    row_op(k, i, 1, 0, -(s[i][k] // s[k][k]), 1)
                elif s[i][k]:
                    g, x, y = xgcd(s[k][k], s[i][k])
                    p, q = s[k][k] // g, s[i][k] // g
                    row_op(k, i, x, y, -q, p)
            for j in range(k + 1, n):
                if s[k][j] and s[k][j] % s[k][k] == 0:
                    col_op(k, j, 1, 0, -(s[k][j] // s[k][k]), 1)
                elif s[k][j]:
                    g, x, y = xgcd(s[k][k], s[k][j])
                    p, q = s[k][k] // g, s[k][j] // g
                    col_op(k, j, x, y, -q, p)
            if any(s[i][k] for i in range(k + 1, m)):
                done = False
            if done:
                piv = s[k][k]
                bad = next(((i, j) for i in range(k + 1, m) for j in range(k + 1, n)
                            if s[i][j] % piv), None)
                if bad is None:
                    break
                # Fold the offending row into row k and repeat.
                row_op(k, bad[0], 1, 1, 0, 1)
        if s[k][k] < 0:
            s[k] = [-x for x in s[k]]
            u[k] = [-x for x in u[k]]
    return s, u, v


def unimodular_inverse(u: Sequence[Sequence[int]]) -> Matrix:
    n = len(u)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(u)]
    for c in range(n):
        piv = next(i for i in range(c, n) if m[i][c] != 0)
        m[c], m[piv] = m[piv], m[c]
        p = m[c][c]
        m[c] = [x / p for x in m[c]]
        for i in range(n):
            if i != c and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    out = [[int(x) for x in row[n:]] for row in m]
    return out


def lattice_index(rows: Sequence[Sequence[int]]) -> int:
    """Index of the lattice spanned by ``rows`` inside its saturation.

    Rows must be linearly independent.  Equals the gcd of maximal minors.
    """
    if not rows:
        return 1
    s, _, _ = smith_normal_form(rows)
    out = 1
    for i in range(len(rows)):
        out *= s[i][i]
    return out


def row_basis_chart(diffs: Sequence[Sequence[int]], n: int) -> tuple[int, Matrix]:
    """Unimodular ``V`` with ``diffs @ V`` zero outside the first ``k`` columns.

    Returns ``(k, V)`` where ``k`` is the rank.  Projecting ``x @ V`` onto the
    first ``k`` coordinates is a lattice isomorphism from the saturated span
    of ``diffs`` onto ``Z^k``.
    """
    if not diffs:
        return 0, identity(n)
    h, u = hermite_normal_form(transpose(diffs))
    k = sum(1 for row in h if any(row))
    return k, transpose(u)
