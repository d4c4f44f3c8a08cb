"""S-unit solutions with S = {2} and the 2-adic criterion.

With 2 inert, every solution of lambda + mu = 1 in {2}-units of Q_{1,5} has
2-adic orders (1, 0), (0, 1) or (-1, -1), and those satisfy the bound and
the mod 3 condition.  In Q_{1,3} the unit solutions have orders (0, 0) and
violate it.
"""

from zpfermat.cyclotomic import layer_polynomial
from zpfermat.numfield import InertPrimeContext, NumberField
from zpfermat.sunits import SearchConfig, check_theorem4_conditions, enumerate_sunit_solutions

K5 = NumberField(tuple(layer_polynomial(5, 1)))
res = enumerate_sunit_solutions(K5, InertPrimeContext(K5), SearchConfig(10, 1))
reports, ok = check_theorem4_conditions(res)
for r in reports:
    s = r.solution
    print("%-6s + %-6s = 1   ord = (%2d, %2d)  class %-3s  passes %s" % (s.lam, s.mu, s.ord_lambda, s.ord_mu, s.lemma9_class, r.passes))
print("all pass:", ok)

K3 = NumberField((-3, 9, -6, 1))
res = enumerate_sunit_solutions(K3, InertPrimeContext(K3), SearchConfig(10, 1))
reports, ok = check_theorem4_conditions(res)
bad = [r for r in reports if not r.passes]
print("\nQ_{1,3}: %d solutions, %d violate the criterion, e.g." % (len(res), len(bad)))
for r in bad[:4]:
    print("  ", r.solution, "ord sum mod 3 =", r.ord_sum_mod3)
