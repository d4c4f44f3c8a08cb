"""
Exact integer, rational and polynomial arithmetic.

Polynomials are plain lists of coefficients in ascending degree order,
``[a0, a1, ..., ad]``, holding ``int`` or ``fractions.Fraction``.  The zero
polynomial is ``[]``.  Polynomials over a prime field F_q are lists of
residues in ``[0, q)`` and the modulus is passed alongside.

Nothing here touches floating point.
"""

from fractions import Fraction
from math import gcd

from .errors import NotSquarefreeError

__all__ = [
    "modpow",
    "trim",
    "degree",
    "poly_add",
    "poly_sub",
    "poly_mul",
    "poly_scale",
    "poly_divmod",
    "poly_eval",
    "poly_shift",
    "poly_derivative",
    "poly_content",
    "poly_inverse_mod",
    "resultant",
    "poly_discriminant",
    "mod_reduce",
    "mod_divmod",
    "mod_gcd",
    "mod_mul",
    "mod_powmod",
    "distinct_degree_factor",
    "sturm_chain",
    "sturm_real_root_count",
    "is_perfect_square",
    "v2",
]


def modpow(base, exponent, modulus):
    """Return ``base**exponent % modulus`` in ``[0, modulus)``."""
    if modulus < 2:
        raise ValueError("modulus must be >= 2, got %r" % (modulus,))
    if exponent < 0:
        raise ValueError("exponent must be non-negative")
    return pow(base, exponent, modulus)


def is_perfect_square(n):
    from math import isqrt

    if n < 0:
        return False
    r = isqrt(n)
    return r * r == n


def v2(n):
    """2-adic valuation of a nonzero integer."""
    if n == 0:
        raise ValueError("v2(0) is undefined")
    n = abs(n)
    return (n & -n).bit_length() - 1


# -- polynomials over Z and Q ------------------------------------------------


def trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def degree(a):
    """Degree of ``a``; the zero polynomial has degree -1."""
    return len(trim(a)) - 1


def poly_add(a, b):
    n = max(len(a), len(b))
    return trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def poly_sub(a, b):
    n = max(len(a), len(b))
    return trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def poly_scale(a, c):
    return trim([c * x for x in a])


def poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return trim(out)


def poly_divmod(a, b):
    """Euclidean division ``a = q*b + r`` with ``deg r < deg b``.

    Exact over Q.  When ``b`` is monic and ``a`` integral the quotient and
    remainder stay integral and no Fractions are introduced.
    """
    a, b = trim(a), trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    lc = b[-1]
    db = len(b) - 1
    r = list(a)
    if len(r) < len(b):
        return [], r
    q = [0] * (len(r) - db)
    monic = lc == 1
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k]
        if c == 0:
            continue
        if not monic:
            c = Fraction(c) / lc
        q[k - db] = c
        for j in range(db + 1):
            r[k - db + j] -= c * b[j]
    return trim(q), trim(r[:db])


def poly_eval(a, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def poly_shift(a, c):
    """Return the coefficients of ``a(x + c)``."""
    out = list(a)
    n = len(out)
    # repeated synthetic division (Taylor shift)
    for i in range(n):
        for j in range(n - 2, i - 1, -1):
            out[j] += c * out[j + 1]
    return trim(out)


def poly_derivative(a):
    return trim([i * a[i] for i in range(1, len(a))])


def poly_content(a):
    g = 0
    for c in a:
        g = gcd(g, c)
    return g


def _as_int(x):
    if isinstance(x, Fraction):
        if x.denominator != 1:
            return x
        return x.numerator
    return x


def resultant(f, g):
    """Resultant Res(f, g) by the Euclidean recurrence over Q.

    Uses ``Res(f, g) = (-1)^(mn) lc(g)^(m-k) Res(g, f mod g)`` with
    ``m = deg f, n = deg g, k = deg(f mod g)``.
    """
    f, g = trim(f), trim(g)
    if not f or not g:
        return 0
    res = Fraction(1)
    while True:
        m, n = len(f) - 1, len(g) - 1
        if n == 0:
            return _as_int(res * Fraction(g[0]) ** m)
        if m == 0:
            return _as_int(res * Fraction(f[0]) ** n)
        _, r = poly_divmod([Fraction(c) for c in f], g)
        if not r:
            return 0
        k = len(r) - 1
        if (m * n) % 2:
            res = -res
        res *= Fraction(g[-1]) ** (m - k)
        f, g = g, r


def poly_discriminant(f):
    """Discriminant of a monic integer polynomial of degree >= 1."""
    f = trim(f)
    if len(f) < 2:
        raise ValueError("discriminant needs degree >= 1")
    if f[-1] != 1:
        raise ValueError("poly_discriminant expects a monic polynomial")
    d = len(f) - 1
    if d == 1:
        return 1
    r = resultant(f, poly_derivative(f))
    return -r if (d * (d - 1) // 2) % 2 else r


# -- polynomials over F_q ----------------------------------------------------


def mod_reduce(a, q):
    return trim([c % q for c in a])


def mod_divmod(a, b, q):
    b = mod_reduce(b, q)
    if not b:
        raise ZeroDivisionError("polynomial division by zero mod %d" % q)
    inv = pow(b[-1], -1, q)
    db = len(b) - 1
    r = mod_reduce(a, q)
    if len(r) < len(b):
        return [], r
    quo = [0] * (len(r) - db)
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k] * inv % q
        if c == 0:
            continue
        quo[k - db] = c
        for j in range(db + 1):
            r[k - db + j] = (r[k - db + j] - c * b[j]) % q
    return trim(quo), trim(r[:db])


def _mod_monic(a, q):
    if not a:
        return a
    inv = pow(a[-1], -1, q)
    return [c * inv % q for c in a]


def mod_gcd(a, b, q):
    """Monic gcd over F_q."""
    a, b = mod_reduce(a, q), mod_reduce(b, q)
    while b:
        a, b = b, mod_divmod(a, b, q)[1]
    return _mod_monic(a, q)


def mod_mul(a, b, q):
    return mod_reduce(poly_mul(a, b), q)


def mod_powmod(base, e, f, q):
    """``base**e mod (f, q)`` by square and multiply."""
    result = [1]
    base = mod_divmod(base, f, q)[1]
    while e:
        if e & 1:
            result = mod_divmod(mod_mul(result, base, q), f, q)[1]
        e >>= 1
        if e:
            base = mod_divmod(mod_mul(base, base, q), f, q)[1]
    return result


def distinct_degree_factor(f, q):
    """Distinct-degree factorization of a monic squarefree ``f`` over F_q.

    Returns ``[(d, g_d), ...]`` where ``g_d`` is the product of all monic
    irreducible factors of degree ``d``; ``deg(g_d) / d`` of them.
    Raises NotSquarefreeError when ``gcd(f, f') != 1`` mod q.
    """
    f = mod_reduce(f, q)
    if len(f) < 2:
        raise ValueError("need a polynomial of degree >= 1 mod %d" % q)
    if f[-1] != 1:
        raise ValueError("distinct_degree_factor expects a monic polynomial")
    if len(mod_gcd(f, poly_derivative(f), q)) > 1:
        raise NotSquarefreeError("polynomial is not squarefree mod %d" % q)

    buckets = []
    x = [0, 1]
    h = x
    d = 0
    while len(f) - 1 >= 2 * (d + 1):
        d += 1
        h = mod_powmod(h, q, f, q)
        g = mod_gcd(f, mod_reduce(poly_sub(h, x), q), q)
        if len(g) > 1:
            buckets.append((d, g))
            f = mod_divmod(f, g, q)[0]
            h = mod_divmod(h, f, q)[1]
    if len(f) > 1:
        buckets.append((len(f) - 1, f))
    return buckets


# -- real roots ----------------------------------------------------------------


def _prem(f, g):
    """Pseudo-remainder scaled by |lc(g)|^(deg f - deg g + 1), so the sign of
    the true remainder is kept."""
    delta = len(f) - len(g) + 1
    lc = g[-1]
    scale = abs(lc) ** delta
    _, r = poly_divmod([Fraction(c * scale) for c in f], g)
    return [int(c) for c in r]


def _primitive(a):
    c = poly_content(a)
    return [x // c for x in a] if c > 1 else a


def sturm_chain(f):
    """Sturm sequence of an integer polynomial, kept primitive.

    Each term is a positive multiple of the classical Sturm term, so sign
    variation counts are unchanged.
    """
    f = trim(f)
    chain = [_primitive(f), _primitive(poly_derivative(f))]
    while len(chain[-1]) > 1:
        r = _prem(chain[-2], chain[-1])
        if not r:
            break
        chain.append(_primitive([-c for c in r]))
    return chain


def _variations(signs):
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_real_root_count(f):
    """Number of distinct real roots of a squarefree integer polynomial."""
    f = trim(f)
    if not f:
        raise ValueError("zero polynomial")
    if len(f) == 1:
        return 0
    chain = sturm_chain(f)
    if len(chain[-1]) > 1:
        raise NotSquarefreeError("polynomial has a repeated factor over Q")

    def sign(c):
        return (c > 0) - (c < 0)

    at_plus = [sign(p[-1]) for p in chain]
    at_minus = [sign(p[-1]) * (-1 if (len(p) - 1) % 2 else 1) for p in chain]
    return _variations(at_minus) - _variations(at_plus)


def poly_inverse_mod(g, f):
    """Inverse of g modulo f over Q (extended Euclid); ``None`` if not coprime."""
    r0, r1 = trim([Fraction(c) for c in f]), trim([Fraction(c) for c in g])
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        quo, rem = poly_divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, poly_sub(s0, poly_mul(quo, s1))
    if not r1:
        return None
    c = r1[0]
    return poly_divmod([x / c for x in s1], f)[1]
