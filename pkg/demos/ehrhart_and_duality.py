"""Ehrhart data, the Gorenstein index and the dual polytope of a small simplex.

Run with ``python3 demos/ehrhart_and_duality.py``.
"""

from gorpoly.constructions import two_s3
from gorpoly.ehrhart import h_star
from gorpoly.gorenstein import (
    deletable_vertices, dual_gorenstein, facet_volume_sum, gorenstein_index, is_minimal,
)
from gorpoly.normal_form import are_isomorphic
from gorpoly.polytope import convex_hull

P = convex_hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 2)])
hs = h_star(P)
print("vertices        ", P.vertices)
print("lattice points  ", len(P.lattice_points))
print("counts i(P, k)  ", hs.counts)
print("h*-vector       ", hs.hstar, "degree", hs.degree)

r = gorenstein_index(P)
cert = dual_gorenstein(P)
print("index           ", r, "; interior point of rP:", cert.interior_point)
print("dual vertices   ", cert.dual.vertices)
print("dual is 2*S_3   ", are_isomorphic(cert.dual, two_s3()))

# facets of a Gorenstein polytope of index r have total volume r * nv(P)
print("facet volumes   ", facet_volume_sum(P), "=", r, "*", P.normalized_volume)

# a vertex of P can be cut off exactly when its dual facet is a basic simplex
print("minimal         ", is_minimal(P))
print("deletable in P* ", deletable_vertices(cert.dual))
