"""
Cyclic quintic fields in which 5 is totally ramified, built from characters.

A cyclic quintic field of conductor f corresponds to a line of order-5
Dirichlet characters mod f.  5 ramifies (necessarily wildly) exactly when
the 5-part of f is 25, so f = 25 m with m a squarefree product of primes
= 1 mod 5.  Writing chi = L_25 + sum_i a_i L_{p_i} (mod 5) with discrete
logarithms L, the field is the fixed field of ker(chi) and its defining
polynomial is the Gaussian period polynomial of that kernel.  2 is inert
iff chi(2) != 0; the field discriminant is f^4.

Used to build the offline stand-in for the LMFDB query.
"""

from itertools import product
from math import gcd

from sympy.ntheory import primitive_root

from .cyclotomic import period_polynomial
from .primes import primes_below

__all__ = ["C5Field", "conductors", "fields_of_conductor", "c5_fields"]


class C5Field:
    def __init__(self, conductor, primes, exponents, two_inert, poly=None):
        self.conductor = conductor
        self.primes = primes
        self.exponents = exponents
        self.two_inert = two_inert
        self._poly = poly

    @property
    def disc(self):
        return self.conductor**4

    @property
    def poly(self):
        if self._poly is None:
            self._poly = period_polynomial(self.conductor, self.kernel())
        return self._poly

    def chi(self, x):
        v = _dlog5(25, x % 25)
        for p, a in zip(self.primes, self.exponents):
            v += a * _dlog5(p, x % p)
        return v % 5

    def kernel(self):
        f = self.conductor
        return [x for x in range(1, f) if gcd(x, f) == 1 and self.chi(x) == 0]

    def __repr__(self):
        return "C5Field(conductor=%d, exponents=%s)" % (self.conductor, self.exponents)


_LOGS = {}


def _dlog5(m, x):
    """Discrete log of x mod m (m = 25 or a prime), reduced mod 5."""
    table = _LOGS.get(m)
    if table is None:
        g = primitive_root(m)
        table = {}
        y = 1
        k = 0
        while y not in table:
            table[y] = k % 5
            y = y * g % m
            k += 1
        _LOGS[m] = table
    return table[x]


def conductors(max_conductor):
    """Conductors 25 m <= max_conductor, ascending, with their prime lists."""
    ps = [int(p) for p in primes_below(max_conductor // 25 + 1) if p % 5 == 1]
    out = []

    def rec(i, m, chosen):
        out.append((25 * m, tuple(chosen)))
        for j in range(i, len(ps)):
            if 25 * m * ps[j] > max_conductor:
                break
            rec(j + 1, m * ps[j], chosen + [ps[j]])

    rec(0, 1, [])
    out.sort()
    return out


def fields_of_conductor(conductor, primes):
    """All cyclic quintic fields of the given conductor (5 ramified)."""
    out = []
    for exps in product(range(1, 5), repeat=len(primes)):
        fld = C5Field(conductor, primes, exps, False)
        fld.two_inert = fld.chi(2) != 0
        out.append(fld)
    return out


def c5_fields(max_conductor, two_inert=True):
    """Cyclic quintic fields with 5 totally ramified and conductor bounded,
    ordered by (discriminant, character exponents)."""
    out = []
    for f, ps in conductors(max_conductor):
        for fld in fields_of_conductor(f, ps):
            if fld.two_inert or not two_inert:
                out.append(fld)
    return out
