"""Generators and minimal binomial relations of the cone semigroup.

Run with ``python3 demos/semigroup_relations.py``.
"""

from gorpoly.classify import _polygon_ids, catalog
from gorpoly.semigroup import artinian_profile, irreducible_generators, minimal_relations


def monomial(exps):
    return " ".join(f"x{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(exps) if e)


polygons = dict(_polygon_ids())
names = ["Delta_1", "Delta_2", "Delta_3", "Delta_4"] + [f"P_{i}" for i in range(1, 8)] + \
    ["Q_1", "Q_2", "Q_3", "R_1"]
for name in names:
    P = polygons[name] if name.startswith("Delta") else catalog()[name].polytope
    gens = irreducible_generators(P)
    pres = minimal_relations(P, gens)
    prof = artinian_profile(P, gens, pres)
    rels = ", ".join(f"{monomial(a)} = {monomial(b)}" for a, b in pres.relations)
    print(f"{name:<8} I(t)={list(gens.I_poly)}  case={prof.case or '-':<4} {rels}")
