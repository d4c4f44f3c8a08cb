"""
Layers of the cyclotomic Z_p-extension of Q.

The n-th layer is the degree p^n subfield of L = Q(zeta_m), m = p^(n+1),
fixed by the unique subgroup H of order p - 1 in (Z/m)^x.  It is generated
by the Gaussian period eta = sum_{h in H} zeta^h, whose minimal polynomial we
build from exact power sums

    s_k = Tr_{L/Q}(eta^k) / [L : F]

and Newton's identities.  eta^k is carried as a multiset of exponents of
zeta (an integer combination of m-th roots of unity), so only the closed
form trace of a single root of unity is ever needed.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import numpy as np
from sympy import factorint, totient

from .arith import modpow
from .errors import ConsistencyError
from .primes import isprime

__all__ = [
    "LayerSpec",
    "ExponentMultiset",
    "trace_zeta",
    "ramanujan_sum",
    "layer_subgroup",
    "newton_polynomial",
    "period_polynomial",
    "layer_polynomial",
    "is_inert_by_congruence",
]


@dataclass(frozen=True)
class LayerSpec:
    """The layer Q_{n,p}: p an odd prime, n >= 1."""

    p: int
    n: int

    def __post_init__(self):
        if self.p < 3 or not isprime(self.p):
            raise ValueError("p must be an odd prime, got %r" % (self.p,))
        if self.n < 1:
            raise ValueError("n must be >= 1, got %r" % (self.n,))

    @property
    def degree(self):
        return self.p**self.n

    @property
    def conductor(self):
        return self.p ** (self.n + 1)


def trace_zeta(m, a):
    """Tr_{Q(zeta_m)/Q}(zeta_m^a) for a prime power m = p^k."""
    fac = factorint(m)
    if m < 2 or len(fac) != 1:
        raise ValueError("trace_zeta expects a prime power modulus, got %r" % (m,))
    ((p, k),) = fac.items()
    a %= m
    if a == 0:
        return m - m // p
    if a % (m // p) == 0:
        return -(m // p)
    return 0


def ramanujan_sum(m, a):
    """Tr_{Q(zeta_m)/Q}(zeta_m^a) for any m >= 1 (the Ramanujan sum c_m(a))."""
    g = gcd(a % m, m)
    k = m // g
    fac = factorint(k)
    if any(e > 1 for e in fac.values()):
        return 0
    mu = -1 if len(fac) % 2 else 1
    return mu * int(totient(m)) // int(totient(k))


class ExponentMultiset:
    """An integer combination sum_a counts[a] * zeta_m^a."""

    def __init__(self, modulus, counts):
        self.modulus = modulus
        self.counts = counts

    @classmethod
    def from_exponents(cls, modulus, exponents):
        counts = [0] * modulus
        for a in exponents:
            counts[a % modulus] += 1
        return cls(modulus, counts)

    def times_period(self, exponents):
        """Multiply by sum_{h in exponents} zeta^h."""
        m = self.modulus
        old = self.counts
        new = [0] * m
        for a, c in enumerate(old):
            if c:
                for h in exponents:
                    new[(a + h) % m] += c
        return ExponentMultiset(m, new)

    def trace(self, trace_fn=ramanujan_sum):
        m = self.modulus
        table = _trace_table(m, trace_fn)
        return sum(c * t for c, t in zip(self.counts, table) if c)


def _trace_table(m, trace_fn):
    # trace depends on gcd(a, m) only
    cache = {}
    out = []
    for a in range(m):
        g = gcd(a, m)
        if g not in cache:
            cache[g] = trace_fn(m, a)
        out.append(cache[g])
    return out


def newton_polynomial(power_sums, d):
    """Monic degree-d polynomial from power sums s_1..s_d of its roots.

    Raises ConsistencyError if an elementary symmetric function is not an
    integer.
    """
    e = [Fraction(1)]
    for k in range(1, d + 1):
        acc = Fraction(0)
        for i in range(1, k + 1):
            term = e[k - i] * power_sums[i - 1]
            acc += term if i % 2 else -term
        ek = acc / k
        if ek.denominator != 1:
            raise ConsistencyError("non-integral e_%d = %s in Newton's identities" % (k, ek))
        e.append(ek)
    # x^d - e1 x^(d-1) + e2 x^(d-2) - ...
    coeffs = [0] * (d + 1)
    for k in range(d + 1):
        coeffs[d - k] = int(e[k]) * (-1 if k % 2 else 1)
    return coeffs


def _power_sums_exact(m, subgroup, kmax, trace_fn):
    base = ExponentMultiset.from_exponents(m, subgroup)
    cur = base
    sums = []
    for k in range(1, kmax + 1):
        if k > 1:
            cur = cur.times_period(subgroup)
        sums.append(cur.trace(trace_fn))
    return sums


def _power_sums_int64(m, subgroup, kmax, trace_fn):
    table = np.array(_trace_table(m, trace_fn), dtype=object)
    ind = np.zeros(m, dtype=np.int64)
    for h in subgroup:
        ind[h % m] += 1
    cur = ind.copy()
    sums = []
    for k in range(1, kmax + 1):
        if k > 1:
            nxt = np.zeros(m, dtype=np.int64)
            for h in subgroup:
                nxt += np.roll(cur, h)
            cur = nxt
        nz = np.flatnonzero(cur)
        sums.append(int(sum(int(cur[i]) * table[i] for i in nz)))
    return sums


def period_polynomial(m, subgroup, trace_fn=ramanujan_sum):
    """Minimal polynomial of the Gaussian period sum_{h in subgroup} zeta_m^h.

    ``subgroup`` must be a subgroup of (Z/m)^x containing -1 (so the period
    is real); the result has degree phi(m) / |subgroup|.
    """
    subgroup = sorted(set(h % m for h in subgroup))
    size = len(subgroup)
    phi = int(totient(m))
    if phi % size:
        raise ValueError("subgroup order %d does not divide phi(%d)" % (size, m))
    d = phi // size
    if size ** d < 2**62:
        tr = _power_sums_int64(m, subgroup, d, trace_fn)
    else:
        tr = _power_sums_exact(m, subgroup, d, trace_fn)
    sums = []
    for t in tr:
        if t % size:
            raise ConsistencyError("trace %d not divisible by [L:F] = %d" % (t, size))
        sums.append(t // size)
    return newton_polynomial(sums, d)


def layer_subgroup(p, n):
    """The order p - 1 subgroup of (Z/p^(n+1))^x."""
    m = p ** (n + 1)
    return [x for x in range(1, m) if x % p and pow(x, p - 1, m) == 1]


def layer_polynomial(spec, n=None):
    """Defining polynomial (ascending coefficients) of Q_{n,p}.

    Accepts a LayerSpec or the pair ``(p, n)``.
    """
    if not isinstance(spec, LayerSpec):
        spec = LayerSpec(spec, n)
    m = spec.conductor
    H = layer_subgroup(spec.p, spec.n)
    if len(H) != spec.p - 1:
        raise ConsistencyError("expected a subgroup of order %d" % (spec.p - 1))
    return period_polynomial(m, H, trace_fn=trace_zeta)


def is_inert_by_congruence(q, p):
    """True iff q^(p-1) is not 1 mod p^2, i.e. q is inert in every Q_{n,p}."""
    if q == p:
        raise ValueError("q = p is the ramified prime")
    if p < 3:
        raise ValueError("p must be an odd prime")
    return modpow(q, p - 1, p * p) != 1
