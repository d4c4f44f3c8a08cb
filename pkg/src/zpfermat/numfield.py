"""
Arithmetic in a monogenic presentation Q(theta), f(theta) = 0, f monic.

Elements live in the working ring Z[theta][1/2]: integer power-basis
coordinates of a numerator plus a power-of-two denominator.  That is all
the S-unit machinery for S = {2 O_F} ever needs; any computation that
would produce an odd denominator raises NotRepresentableError.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .arith import (
    distinct_degree_factor,
    poly_discriminant,
    poly_divmod,
    poly_eval,
    poly_inverse_mod,
    poly_mul,
    resultant,
    trim,
    v2,
)
from .errors import (
    ConsistencyError,
    InconclusiveError,
    InvalidContextError,
    NotRepresentableError,
)

__all__ = [
    "NumberField",
    "FieldElement",
    "SplittingPattern",
    "RamifiedPrimeContext",
    "InertPrimeContext",
    "nf_arith",
    "norm",
    "splitting_pattern",
    "residue_at_p",
    "check_norm_residue",
    "ord_at_q",
    "is_s_unit",
]


@dataclass(frozen=True)
class NumberField:
    """Q[x]/(f) for a monic integer polynomial f (ascending coefficients)."""

    poly: tuple

    def __post_init__(self):
        f = tuple(int(c) for c in trim(self.poly))
        if len(f) < 2 or f[-1] != 1:
            raise ValueError("defining polynomial must be monic of degree >= 1")
        object.__setattr__(self, "poly", f)
        if self.disc == 0:
            raise ValueError("defining polynomial has a repeated root")

    @property
    def degree(self):
        return len(self.poly) - 1

    @cached_property
    def disc(self):
        return poly_discriminant(list(self.poly))

    def element(self, coords, denom_exp=0):
        """Element ``sum coords[i] theta^i / 2^denom_exp``.

        Coordinates may be ints or Fractions with power-of-two denominators;
        lists shorter than the degree are zero-padded, longer ones reduced.
        """
        coords = list(coords)
        if any(isinstance(c, Fraction) and c.denominator != 1 for c in coords):
            return FieldElement._from_rational(self, coords, denom_exp)
        coords = [int(c) for c in coords]
        if len(coords) > self.degree:
            coords = poly_divmod(coords, list(self.poly))[1]
        return FieldElement._normalized(self, coords, denom_exp)

    def __call__(self, coords, denom_exp=0):
        if isinstance(coords, (int, Fraction)):
            return self.rational(coords)
        return self.element(coords, denom_exp)

    def rational(self, x):
        x = Fraction(x)
        return self.element([x])

    @property
    def theta(self):
        return self.element([0, 1])

    @property
    def one(self):
        return self.element([1])

    @property
    def zero(self):
        return self.element([])


@dataclass(frozen=True)
class FieldElement:
    field: NumberField = field(repr=False)
    coords: tuple
    denom_exp: int = 0

    # construction ------------------------------------------------------------

    @classmethod
    def _normalized(cls, K, coords, e):
        coords = list(coords) + [0] * (K.degree - len(coords))
        if e < 0:
            coords = [c << -e for c in coords]
            e = 0
        if not any(coords):
            return cls(K, tuple(coords), 0)
        while e > 0 and all(c % 2 == 0 for c in coords):
            coords = [c // 2 for c in coords]
            e -= 1
        return cls(K, tuple(coords), e)

    @classmethod
    def _from_rational(cls, K, coords, e=0):
        coords = [Fraction(c) for c in coords]
        if len(coords) > K.degree:
            coords = poly_divmod(coords, list(K.poly))[1]
        den = 1
        for c in coords:
            den = den * c.denominator // _gcd(den, c.denominator)
        if den & (den - 1):
            raise NotRepresentableError("denominator %d is not a power of 2" % den)
        k = den.bit_length() - 1
        return cls._normalized(K, [int(c * den) for c in coords], e + k)

    # predicates / views ------------------------------------------------------

    @property
    def numerator(self):
        return list(self.coords)

    def is_zero(self):
        return not any(self.coords)

    def is_integral(self):
        return self.denom_exp == 0

    def height(self):
        """Max absolute coordinate of the numerator."""
        return max(abs(c) for c in self.coords)

    def as_fractions(self):
        den = 1 << self.denom_exp
        return [Fraction(c, den) for c in self.coords]

    def key(self):
        return (self.denom_exp, self.coords)

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coords):
            if c == 0:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else "t^%d" % i)
            if mono and abs(c) == 1:
                s = ("-" if c < 0 else "+") + mono
            else:
                s = "%+d%s" % (c, ("*" + mono) if mono else "")
            terms.append(s)
        body = "".join(terms).lstrip("+") or "0"
        if self.denom_exp:
            fmt = "%s/%d" if len(terms) == 1 else "(%s)/%d"
            return fmt % (body, 1 << self.denom_exp)
        return body

    # arithmetic --------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("elements of different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.rational(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        e = max(self.denom_exp, other.denom_exp)
        a = [c << (e - self.denom_exp) for c in self.coords]
        b = [c << (e - other.denom_exp) for c in other.coords]
        return FieldElement._normalized(self.field, [x + y for x, y in zip(a, b)], e)

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, tuple(-c for c in self.coords), self.denom_exp)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        prod = poly_mul(list(self.coords), list(other.coords))
        _, r = poly_divmod(prod, list(self.field.poly))
        return FieldElement._normalized(self.field, r, self.denom_exp + other.denom_exp)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        inv = poly_inverse_mod(list(self.coords), list(self.field.poly))
        if inv is None:
            raise ZeroDivisionError("element is a zero divisor (f reducible?)")
        return FieldElement._from_rational(self.field, inv, -self.denom_exp)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = self.field.one
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def norm(self):
        return norm(self)


def _gcd(a, b):
    from math import gcd

    return gcd(a, b)


def nf_arith(a, b, op):
    """Apply ``op`` in {'add', 'sub', 'mul', 'div'} to two field elements."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError("unknown operation %r" % (op,))


def norm(a):
    """N_{F/Q}(a) as an exact Fraction: Res(f, numerator) / 2^(d * e)."""
    if a.is_zero():
        return Fraction(0)
    r = resultant(list(a.field.poly), list(a.coords))
    return Fraction(r, 1 << (a.field.degree * a.denom_exp))


def _numerator_norm(a):
    return int(resultant(list(a.field.poly), list(a.coords)))


@dataclass(frozen=True)
class SplittingPattern:
    """Residue degrees of the primes above an unramified q, ascending."""

    degrees: tuple

    @property
    def is_inert(self):
        return len(self.degrees) == 1

    @property
    def splits_completely(self):
        return all(d == 1 for d in self.degrees)

    @property
    def equal_degrees(self):
        return len(set(self.degrees)) == 1

    def __iter__(self):
        return iter(self.degrees)


def splitting_pattern(K, q):
    """Factorization type of q in K, read off f mod q.

    Raises InconclusiveError when q divides disc(f).
    """
    if K.disc % q == 0:
        raise InconclusiveError("%d divides disc(f); pattern of f mod %d need not match the field" % (q, q))
    degs = []
    for d, g in distinct_degree_factor(list(K.poly), q):
        degs.extend([d] * ((len(g) - 1) // d))
    return SplittingPattern(tuple(sorted(degs)))


@dataclass(frozen=True)
class RamifiedPrimeContext:
    """p with f = (x - c)^d mod p; realizes the prime (p, theta - c)."""

    field: NumberField
    p: int
    c: int

    def __post_init__(self):
        d = self.field.degree
        shifted = _shift_mod(self.field.poly, self.c, self.p)
        if any(x % self.p for x in shifted[:d]):
            raise InvalidContextError(
                "f is not (x - %d)^%d modulo %d" % (self.c, d, self.p)
            )

    @classmethod
    def find(cls, K, p):
        for c in range(p):
            shifted = _shift_mod(K.poly, c, p)
            if all(x % p == 0 for x in shifted[: K.degree]):
                return cls(K, p, c)
        raise InvalidContextError("no residue c with f = (x - c)^d mod %d" % p)


def _shift_mod(poly, c, p):
    from .arith import poly_shift

    return [x % p for x in poly_shift(list(poly), c)]


@dataclass(frozen=True)
class InertPrimeContext:
    """Witness that 2 is inert in the field, so q = 2 O_F is prime."""

    field: NumberField

    def __post_init__(self):
        pat = splitting_pattern(self.field, 2)
        if not pat.is_inert:
            raise InvalidContextError("2 is not inert: residue degrees %s" % (pat.degrees,))


def residue_at_p(ctx, a):
    """Image of a in O_F / (p, theta - c) = F_p."""
    p = ctx.p
    if p == 2:
        raise ValueError("the 2-power denominator is not invertible mod 2")
    if a.field != ctx.field:
        raise ValueError("element is not in the context's field")
    val = poly_eval(list(a.coords), ctx.c) % p
    return val * pow(pow(2, a.denom_exp, p), -1, p) % p


def check_norm_residue(ctx, a):
    """True iff N(a) = a mod the unique prime above p."""
    d, p = ctx.field.degree, ctx.p
    k = d
    while k % p == 0:
        k //= p
    if k != 1:
        raise ValueError("field degree %d is not a power of %d" % (d, p))
    n = norm(a)
    n_mod = n.numerator * pow(n.denominator, -1, p) % p
    return n_mod == residue_at_p(ctx, a)


def ord_at_q(ctx, a):
    """Valuation of a at q = 2 O_F (2 inert): v2(N(a)) / d."""
    if a.field != ctx.field:
        raise ValueError("element is not in the context's field")
    if a.is_zero():
        raise ValueError("ord of zero is undefined")
    d = ctx.field.degree
    v = v2(_numerator_norm(a))
    if v % d:
        raise ConsistencyError("v2(N) = %d not divisible by d = %d although 2 is inert" % (v, d))
    return v // d - a.denom_exp


def is_s_unit(ctx, a):
    """True iff the ideal (a) is supported on {2 O_F}."""
    if a.is_zero():
        return False
    n = abs(_numerator_norm(a))
    return n & (n - 1) == 0
