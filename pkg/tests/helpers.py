"""Seeded generators shared by the test modules."""

from __future__ import annotations

import random

from gorpoly.polytope import convex_hull


def random_unimodular(n: int, rng: random.Random, steps: int | None = None):
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps if steps is not None else 3 * n):
        if n == 1:
            break
        i, j = rng.sample(range(n), 2)
        c = rng.choice((-1, 1))
        m[i] = [a + c * b for a, b in zip(m[i], m[j])]
    if rng.random() < 0.5:
        m[0] = [-x for x in m[0]]
    return m


def random_image(P, rng: random.Random, shift: int = 5):
    n = P.dim_ambient
    return P.transform(random_unimodular(n, rng)).translate(
        [rng.randint(-shift, shift) for _ in range(n)])


def random_polytope(rng: random.Random, n: int, max_vertices: int = 8, box: int = 2):
    """A random full-dimensional lattice polytope with at most ``max_vertices`` vertices."""
    while True:
        k = rng.randint(n + 1, max_vertices)
        pts = {tuple(rng.randint(-box, box) for _ in range(n)) for _ in range(k)}
        P = convex_hull(pts, n)
        if P.is_full_dimensional and len(P.vertices) <= max_vertices:
            return P


def corpus(max_dim: int = 5):
    """Every classified degree-2 entry (pyramids included) of dimension 2 to ``max_dim``."""
    from gorpoly.classify import classify_degree2
    out = []
    for n in range(2, max_dim + 1):
        out.extend(classify_degree2(n).entries)
    return out


def random_subpolytope(P, rng: random.Random):
    """Hull of a random full-dimensional subset of the lattice points of ``P``."""
    pts = list(P.lattice_points)
    while True:
        k = rng.randint(P.dim + 1, len(pts))
        Q = convex_hull(rng.sample(pts, k), P.dim_ambient)
        if Q.is_full_dimensional:
            return Q
