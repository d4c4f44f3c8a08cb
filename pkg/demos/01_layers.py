"""Building the first layers of the cyclotomic Z_p-towers.

Q_{n,p} is the degree p^n subfield of Q(zeta_{p^(n+1)}).  It is generated by
the Gaussian period over the order p - 1 subgroup of (Z/p^(n+1))^x, and the
defining polynomial comes out of power sums plus Newton's identities.
"""

import time

from zpfermat.arith import poly_discriminant, sturm_real_root_count
from zpfermat.cyclotomic import layer_polynomial
from sympy import factorint

for p, n in [(3, 1), (5, 1), (7, 1), (3, 2)]:
    f = layer_polynomial(p, n)
    disc = poly_discriminant(f)
    print("Q_{%d,%d}  degree %d" % (n, p, len(f) - 1))
    print("  coefficients (ascending):", f)
    print("  real roots:", sturm_real_root_count(f))
    print("  disc(f) =", dict(factorint(disc)))

# p is the only prime ramified in the field; anything else in disc(f) is
# an index of Z[eta] in the ring of integers and shows up squared (7^2 for
# p = 5, 19^2 31^2 for p = 7)

t0 = time.perf_counter()
f = layer_polynomial(7, 2)
print("\nQ_{2,7}: degree %d in %.2fs, largest coefficient has %d digits"
      % (len(f) - 1, time.perf_counter() - t0, max(len(str(abs(c))) for c in f)))

# the cubic layer in the shape used for the unit equation: theta = 2 - x
print("\nx^3 - 3x + 1 at x = 2 - theta gives -(theta^3 - 6 theta^2 + 9 theta - 3)")
