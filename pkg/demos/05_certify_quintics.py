"""Certifying cyclic quintic fields and the verdict table.

The certifier collects evidence that a polynomial defines a totally real
p-extension with p totally ramified and 2 inert.  The packaged snapshot of
cyclic quintic fields is run through it, followed by the verdicts for a few
towers.
"""

from zpfermat.arith import is_perfect_square
from zpfermat.lmfdb import filter_by_theorem, read_fixture
from zpfermat.verdict import asymptotic_flt_verdict, certify_general_field

f = [-451, -990, -605, -110, 0, 1]
rep = certify_general_field(f, 5)
for name, check in rep.checks.items():
    print("%-24s %-5s %s" % (name, check.status, check.detail))
print("overall:", rep.overall)
q = rep.disc // (5**8 * 11**4)
print("disc / (5^8 11^4) = %d, a square: %s" % (q, is_perfect_square(q)))

print("\nx^5 - 2:", certify_general_field([-2, 0, 0, 0, 0, 1], 5).overall)

header, records, _ = read_fixture()
res = filter_by_theorem(records)
print("\nsnapshot %s: %d records, %d certified, %d failed, %d inconclusive"
      % (header["snapshot_date"], len(records), len(res.passed), len(res.failed), len(res.inconclusive)))
print("smallest discriminants:", [(r.label, r.disc) for r in sorted(records, key=lambda r: r.disc)[:3]])

print()
for p in (2, 3, 5, 7, 1093, 3511):
    v = asymptotic_flt_verdict(p, 1)
    print("p = %4d  %-16s %s" % (p, v.status, ", ".join(v.citations)))
