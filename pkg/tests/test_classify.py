import pytest

from gorpoly.classify import (
    REFERENCE_NAMES, catalog, catalog_entry, classify_degree2, classify_reflexive_polygons,
    picard_rank, route_cayley, route_deletion, verify_fourteen, verify_twelve,
)
from gorpoly.constructions import pyramid, theta
from gorpoly.ehrhart import h_star
from gorpoly.gorenstein import dual, is_gorenstein_degree2
from gorpoly.normal_form import are_isomorphic, normal_form
from gorpoly.polytope import PolytopeError

COUNTS = {2: (16, 16), 3: (31, 15), 4: (36, 5), 5: (37, 1), 6: (37, 0)}


def test_sixteen_polygons():
    polys = classify_reflexive_polygons()
    assert len(polys) == 16
    keys = {normal_form(P) for P in polys}
    for P in polys:
        D = dual(P)
        assert normal_form(D) in keys
        assert P.normalized_volume + D.normalized_volume == 12


@pytest.mark.parametrize("n", sorted(COUNTS))
def test_counts(n):
    res = classify_degree2(n)
    assert (res.total, len(res.non_pyramids)) == COUNTS[n]
    assert res.counts[n] == COUNTS[n]


def test_pyramid_recursion():
    for n in range(3, 7):
        assert COUNTS[n][0] - COUNTS[n - 1][0] == COUNTS[n][1]


def test_every_entry_is_gorenstein_degree_two():
    for n in range(2, 6):
        for e in classify_degree2(n).entries:
            P = e.polytope
            assert is_gorenstein_degree2(P)
            assert h_star(P).hstar == (1, e.nv - 2, 1) + (0,) * (n - 2)
            assert len(P.lattice_points) == n + e.nv - 1
            assert normal_form(P) == e.key


@pytest.mark.parametrize("n", [3, 4, 5])
def test_routes_agree(n):
    assert set(route_cayley(n)) == set(route_deletion(n))


def test_catalog_values():
    cat = catalog()
    for name, (nv, f, partner) in REFERENCE_NAMES.items():
        e = cat[name]
        assert (e.nv, e.f_vector, e.dual_id) == (nv, f, partner)
        assert normal_form(dual(e.polytope)) == cat[partner].key


def test_dual_pairing_in_dimension_three():
    pairs = {"P_1": "P_15", "P_2": "P_14", "P_4": "P_13", "P_5": "P_10", "P_6": "P_11", "P_7": "P_12"}
    cat = catalog()
    for a, b in pairs.items():
        assert cat[a].dual_id == b and cat[b].dual_id == a
    for a in ("P_3", "P_8", "P_9"):
        assert cat[a].dual_id == a


def test_pyramid_entries_point_to_dual_pyramids():
    for n in range(3, 6):
        entries = {e.id: e for e in classify_degree2(n).entries}
        for e in entries.values():
            partner = entries[e.dual_id]
            assert normal_form(dual(e.polytope)) == partner.key


def test_unique_five_dimensional_non_pyramid_is_theta2():
    (e,) = classify_degree2(5).non_pyramids
    assert e.id == "R_1"
    assert are_isomorphic(e.polytope, theta(2))


def test_cayley_coverage():
    for e in catalog().values():
        if e.dim >= 3 and e.id != "P_15":
            assert e.cayley
    assert catalog()["P_15"].cayley == ()


def test_minimality_and_picard_bounds():
    for n in range(2, 6):
        for e in classify_degree2(n).entries:
            if e.minimal:
                assert e.nv <= 4
            if e.maximal and not e.pyramid_folds:
                assert e.picard_rank <= 3


def test_identity_twelve():
    P1 = catalog()["P_1"].polytope
    assert len(P1.faces(1)) == 6 and verify_twelve(P1) == 12
    for e in classify_degree2(3).entries:
        assert verify_twelve(e.polytope) == 12
    for P in classify_reflexive_polygons():
        assert verify_twelve(pyramid(P)) == 12


def test_identity_fourteen():
    P1 = catalog()["P_1"].polytope
    assert len(P1.lattice_points) == 4 and len(dual(P1).lattice_points) == 10
    for e in classify_degree2(3).non_pyramids:
        assert verify_fourteen(e.polytope) == 14
        assert e.nv + dual(e.polytope).normalized_volume <= 10
    with pytest.raises(PolytopeError):
        verify_fourteen(classify_degree2(3).entries[-1].polytope)


def test_picard_rank():
    cat = catalog()
    assert picard_rank(cat["P_15"].polytope) == 1
    assert picard_rank(cat["R_1"].polytope) == 3
    assert cat["P_15"].picard_rank == 1
    with pytest.raises(PolytopeError):
        picard_rank(pyramid(cat["P_1"].polytope))


def test_catalog_lookup_of_pyramids():
    e = catalog_entry("Pi^2(P_3)")
    assert e.dim == 5 and e.pyramid_folds == 2 and e.pyramid_base_id == "P_3"
    with pytest.raises(KeyError):
        catalog_entry("nope")


@pytest.mark.slow
@pytest.mark.parametrize("n", [7, 8])
def test_stabilization(n):
    res = classify_degree2(n)
    assert (res.total, len(res.non_pyramids)) == (37, 0)
    bases = {e.pyramid_base_id for e in res.entries}
    assert "R_1" in bases
