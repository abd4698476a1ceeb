import random

import pytest

from gorpoly.classify import catalog
from gorpoly.normal_form import are_isomorphic, canonical_vertices, normal_form
from gorpoly.polytope import convex_hull
from helpers import random_image, random_polytope
from oracles import brute_isomorphic


def test_translation_invariance():
    P = convex_hull([(0, 0), (2, 0), (0, 1)])
    assert normal_form(P) == normal_form(P.translate((5, -3)))


def test_square_and_triangle_differ():
    sq = convex_hull([(0, 0), (1, 0), (0, 1), (1, 1)])
    tri = convex_hull([(0, 0), (1, 0), (0, 1)])
    assert normal_form(sq) != normal_form(tri)


@pytest.mark.parametrize("name", ["P_1", "P_8", "Q_2", "R_1"])
def test_invariance_under_100_random_transforms(name):
    P = catalog()[name].polytope
    key = normal_form(P)
    rng = random.Random(name)
    for _ in range(100):
        assert normal_form(random_image(P, rng)) == key


def test_idempotent_via_canonical_vertices():
    rng = random.Random(7)
    for _ in range(20):
        P = random_polytope(rng, rng.choice((2, 3)))
        C = convex_hull(canonical_vertices(P), P.dim)
        assert normal_form(C) == normal_form(P)
        assert canonical_vertices(C) == canonical_vertices(P)


def test_key_serialization_is_stable():
    P = catalog()["P_3"].polytope
    k = normal_form(P)
    assert k.serialize() == normal_form(P.translate((1, 2, 3))).serialize()
    assert len(k.digest) == 16


def test_oracle_on_small_cases():
    tri = convex_hull([(0, 0), (2, 0), (0, 1)])
    other = convex_hull([(0, 0), (1, 0), (0, 2)])
    thin = convex_hull([(0, 0), (1, 0), (0, 3)])
    assert are_isomorphic(tri, other) and brute_isomorphic(tri.vertices, other.vertices)
    assert not are_isomorphic(tri, thin) and not brute_isomorphic(tri.vertices, thin.vertices)
