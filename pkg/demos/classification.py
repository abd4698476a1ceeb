"""The classification of Gorenstein polytopes of degree two, dimension by dimension.

Run with ``python3 demos/classification.py``.
"""

import time

from gorpoly.classify import catalog, classify_degree2, picard_rank

print(f"{'dim':>3} {'total':>6} {'non-pyr':>8} {'seconds':>8}")
for n in range(2, 7):
    t = time.perf_counter()
    res = classify_degree2(n)
    print(f"{n:>3} {res.total:>6} {len(res.non_pyramids):>8} {time.perf_counter() - t:>8.2f}")

print()
print(f"{'id':<6} {'nv':>3} {'dual':<6} {'f-vector':<26} {'min':<5} {'max':<5} rank")
for e in catalog().values():
    if e.dim < 3:
        continue
    rank = picard_rank(e.polytope)
    print(f"{e.id:<6} {e.nv:>3} {e.dual_id:<6} {str(e.f_vector):<26} "
          f"{str(e.minimal):<5} {str(e.maximal):<5} {rank}")
