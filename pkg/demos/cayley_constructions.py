"""Minkowski decompositions of a reflexive polygon and the Cayley polytopes they give.

Run with ``python3 demos/cayley_constructions.py``.
"""

from gorpoly.constructions import cayley, minkowski_decompositions, theta
from gorpoly.ehrhart import h_star
from gorpoly.gorenstein import gorenstein_index, is_pyramid
from gorpoly.normal_form import are_isomorphic
from gorpoly.polytope import convex_hull

square = convex_hull([(-1, -1), (1, -1), (-1, 1), (1, 1)])
for d in minkowski_decompositions(square):
    C = cayley(d.summands)
    kind = "pyramid" if is_pyramid(C) else "non-pyramid"
    print(f"r={d.r}  dim {C.dim}  index {gorenstein_index(C)}  h*={h_star(C).hstar}  {kind}")
    for S in d.summands:
        print("      summand", S.vertices)

T = theta(2)
four = [d for d in minkowski_decompositions(square) if d.r == 4][0]
print("Cayley of the four unit segments is theta(2):", are_isomorphic(cayley(four.summands), T))
print("theta(2) f-vector:", T.f_vector)
