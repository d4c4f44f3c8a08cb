"""The unit equation lambda + mu = 1 in the first layers.

Q_{1,3} has 18 solutions, three orbits of the six-element symmetry group
(swap, and lambda -> 1/lambda).  In Q_{1,5} and Q_{1,7} the same search
finds nothing.
"""

import time

from zpfermat.cyclotomic import layer_polynomial
from zpfermat.numfield import NumberField
from zpfermat.sunits import enumerate_unit_solutions

K = NumberField((-3, 9, -6, 1))  # theta^3 - 6 theta^2 + 9 theta - 3
for H in (10, 20, 40):
    res = enumerate_unit_solutions(K, H)
    print("H = %2d: %2d solutions (%d found in the box, %d by symmetry)" % (H, len(res), len(res.in_box), len(res.escaped)))

for s in res:
    print("  ", s)

for p in (5, 7):
    L = NumberField(tuple(layer_polynomial(p, 1)))
    t0 = time.perf_counter()
    res = enumerate_unit_solutions(L, 6)
    print("Q_{1,%d}, H = 6: %d solutions, %d candidates in %.1fs" % (p, len(res), res.candidates, time.perf_counter() - t0))
