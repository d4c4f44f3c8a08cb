"""Which primes stay inert in the tower?

q is inert in every layer Q_{n,p} exactly when q^(p-1) is not 1 mod p^2.
Here the congruence is compared with the actual factorization of the layer
polynomial mod q, and the Wieferich primes (where 2 stops being inert) are
located.
"""

from zpfermat.cyclotomic import is_inert_by_congruence, layer_polynomial
from zpfermat.numfield import NumberField, splitting_pattern
from zpfermat.primes import primes_below
from zpfermat.verdict import wieferich_scan

for p, n in [(3, 1), (3, 2), (5, 1), (7, 1)]:
    K = NumberField(tuple(layer_polynomial(p, n)))
    rows = []
    for q in primes_below(60).tolist():
        if (p * K.disc) % q == 0:
            continue
        pat = splitting_pattern(K, q)
        rows.append("%d:%s%s" % (q, "I" if pat.is_inert else "s", "" if pat.is_inert == is_inert_by_congruence(q, p) else "!"))
    print("Q_{%d,%d}" % (n, p), " ".join(rows))

# the pattern at 3 for p = 3 is the same in both layers: only q and p matter

print("\nWieferich primes below 10^6:", wieferich_scan(2, 10**6))
K = NumberField(tuple(layer_polynomial(5, 1)))
print("2 in Q_{1,5}:", splitting_pattern(K, 2).degrees)
