import cmath
import math

import mpmath
import pytest

from zpfermat import arith
from zpfermat.cyclotomic import (
    ExponentMultiset,
    LayerSpec,
    is_inert_by_congruence,
    layer_polynomial,
    layer_subgroup,
    newton_polynomial,
    period_polynomial,
    ramanujan_sum,
    trace_zeta,
)
from zpfermat.errors import ConsistencyError
from zpfermat.primes import primes_below

from conftest import CUBIC


def numeric_period_poly(m, subgroup, dps=80):
    """Oracle: expand prod (x - eta_j) over the conjugates in high precision."""
    mpmath.mp.dps = dps
    units = [a for a in range(1, m) if math.gcd(a, m) == 1]
    seen, etas = set(), []
    for a in units:
        coset = frozenset(a * h % m for h in subgroup)
        if coset in seen:
            continue
        seen.add(coset)
        etas.append(sum(mpmath.cos(2 * mpmath.pi * k / m) for k in coset))
    poly = [mpmath.mpf(1)]
    for e in etas:
        nxt = [mpmath.mpf(0)] * (len(poly) + 1)
        for i, c in enumerate(poly):
            nxt[i + 1] += c
            nxt[i] -= c * e
        poly = nxt
    out = [int(mpmath.nint(c)) for c in poly]
    assert all(abs(c - o) < mpmath.mpf(10) ** (-20) for c, o in zip(poly, out))
    return out


def test_trace_zeta_values():
    assert trace_zeta(9, 0) == 6
    assert trace_zeta(9, 3) == -3
    assert trace_zeta(9, 6) == -3
    assert trace_zeta(9, 1) == 0
    assert trace_zeta(7, 2) == -1
    with pytest.raises(ValueError):
        trace_zeta(12, 1)


@pytest.mark.parametrize("m", [1, 2, 6, 12, 25, 30, 275])
def test_ramanujan_sum_numeric(m):
    for a in range(m):
        num = sum(cmath.exp(2j * math.pi * k * a / m) for k in range(1, m + 1) if math.gcd(k, m) == 1)
        assert ramanujan_sum(m, a) == round(num.real)
        assert abs(num.imag) < 1e-9


def test_ramanujan_agrees_with_prime_power_trace():
    for m in (9, 25, 27, 49, 125):
        assert all(ramanujan_sum(m, a) == trace_zeta(m, a) for a in range(m))


def test_exponent_multiset_trace():
    e = ExponentMultiset.from_exponents(9, [1, 8])  # 2 cos(2 pi / 9)
    assert e.trace(trace_zeta) == 0
    sq = e.times_period([1, 8])  # eta^2 = 2 + zeta^2 + zeta^-2
    assert sq.counts[0] == 2
    assert sq.trace(trace_zeta) == 12


def test_newton_identities():
    # roots 1, 2, 3: power sums 6, 14, 36
    assert newton_polynomial([6, 14, 36], 3) == [-6, 11, -6, 1]
    with pytest.raises(ConsistencyError):
        newton_polynomial([1, 0], 2)


def test_layer_spec_validation():
    assert LayerSpec(5, 2).degree == 25
    assert LayerSpec(5, 2).conductor == 125
    for bad in ((4, 1), (3, 0), (2, 1)):
        with pytest.raises(ValueError):
            LayerSpec(*bad)


def test_cubic_layer_golden():
    f = layer_polynomial(3, 1)
    assert f == [1, -3, 0, 1]
    # theta = 2 - x
    g = [0]
    for c in reversed(f):
        g = arith.poly_add(arith.poly_mul(g, [2, -1]), [c])
    assert [-c for c in g] == list(CUBIC)


@pytest.mark.parametrize("p,n", [(3, 1), (3, 2), (5, 1), (7, 1), (11, 1), (5, 2)])
def test_layer_against_numeric_oracle(p, n):
    m = p ** (n + 1)
    assert layer_polynomial(p, n) == numeric_period_poly(m, layer_subgroup(p, n))


def test_period_polynomial_composite_conductor():
    # the real quadratic field of conductor 5 and the cubic of conductor 7
    assert period_polynomial(5, [1, 4]) == [-1, 1, 1]
    sub = [1, 6]
    assert period_polynomial(7, sub) == [-1, -2, 1, 1]
    # conductor 275 (= 25 * 11), kernel of an order-5 character
    from zpfermat.c5fields import C5Field

    fld = C5Field(275, (11,), (2,), True)
    kern = fld.kernel()
    assert period_polynomial(275, kern) == numeric_period_poly(275, kern)


@pytest.mark.parametrize("p,n", [(3, 1), (3, 2), (5, 1), (7, 1), (5, 2), (7, 2)])
def test_layer_shape(p, n):
    f = layer_polynomial(p, n)
    d = p**n
    assert len(f) - 1 == d and f[-1] == 1
    if d <= 25:
        assert arith.sturm_real_root_count(f) == d
        disc = arith.poly_discriminant(f)
        assert disc > 0
        k = 0
        while disc % p == 0:
            disc //= p
            k += 1
        assert k > 0 and arith.is_perfect_square(disc)


def _cross_validate(p, n):
    f = layer_polynomial(p, n)
    disc = arith.poly_discriminant(f)
    bad = []
    for q in primes_below(200).tolist():
        if (p * disc) % q == 0:
            continue
        degs = [d for d, _ in arith.distinct_degree_factor(f, q)]
        oracle = degs == [len(f) - 1]
        if oracle != is_inert_by_congruence(q, p):
            bad.append(q)
    return bad


@pytest.mark.parametrize("p,n", [(3, 1), (3, 2), (5, 1), (7, 1)])
def test_inertness_congruence_matches_factorization(p, n):
    assert _cross_validate(p, n) == []


def test_inertness_examples():
    assert is_inert_by_congruence(2, 5)
    assert not is_inert_by_congruence(2, 1093)
    assert not is_inert_by_congruence(2, 3511)
    assert not is_inert_by_congruence(10, 3)  # 10^2 = 1 mod 9
    with pytest.raises(ValueError):
        is_inert_by_congruence(5, 5)
    with pytest.raises(ValueError):
        is_inert_by_congruence(3, 2)
