import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from zpfermat.errors import InconclusiveError, InvalidContextError, NotRepresentableError
from zpfermat.numfield import (
    InertPrimeContext,
    NumberField,
    RamifiedPrimeContext,
    check_norm_residue,
    is_s_unit,
    nf_arith,
    norm,
    ord_at_q,
    residue_at_p,
    splitting_pattern,
)


def det_norm(a):
    """Oracle: determinant of multiplication by a on the power basis."""
    K = a.field
    d = K.degree
    x = sympy.symbols("x")
    f = sympy.Poly(list(reversed(K.poly)), x)
    alpha = sympy.Poly(list(reversed([sympy.Rational(c) for c in a.as_fractions()])), x)
    cols = []
    for j in range(d):
        r = (alpha * sympy.Poly(x**j, x)).rem(f)
        c = list(reversed(r.all_coeffs()))
        cols.append(c + [0] * (d - len(c)))
    return Fraction(str(sympy.Matrix(cols).T.det()))


def test_construction_checks():
    with pytest.raises(ValueError):
        NumberField((1, 0, 2))
    with pytest.raises(ValueError):
        NumberField((1, -2, 1))
    K = NumberField((-3, 9, -6, 1, 0))
    assert K.degree == 3 and K.disc == 81


def test_cubic_examples(cubic_field):
    K = cubic_field
    t = K.theta
    assert norm(2 - t) == -1
    assert norm(t) == 3
    ctx = RamifiedPrimeContext.find(K, 3)
    assert ctx.c == 0
    assert residue_at_p(ctx, 2 - t) == 2
    q = InertPrimeContext(K)
    assert ord_at_q(q, K(2)) == 1
    assert ord_at_q(q, K(Fraction(1, 2))) == -1
    assert ord_at_q(q, 2 - t) == 0
    with pytest.raises(NotRepresentableError):
        K(Fraction(1, 3))
    with pytest.raises(NotRepresentableError):
        K.one / t  # N(theta) = 3


def test_arith_identities(cubic_field):
    K = cubic_field
    t = K.theta
    assert t**3 == 6 * t**2 - 9 * t + 3
    a = K([1, 2, 3], 1)
    assert a + (-a) == K.zero
    assert nf_arith(a, K(4), "mul") == K([2, 4, 6])
    assert nf_arith(K([5, 1]), 2 - t, "div") * (2 - t) == K([5, 1])
    u = 2 - t
    assert u * u.inverse() == K.one
    assert str(K([-1, 1], 1)) == "(-1+t)/2"
    with pytest.raises(ValueError):
        nf_arith(a, a, "pow")


coords3 = st.lists(st.integers(-30, 30), min_size=3, max_size=3)


@given(coords3, coords3, st.integers(0, 3), st.integers(0, 3))
@settings(max_examples=80)
def test_norm_multiplicative(x, y, e, f):
    K = NumberField((-3, 9, -6, 1))
    a, b = K(x, e), K(y, f)
    assert norm(a * b) == norm(a) * norm(b)


@given(coords3, st.integers(0, 3))
@settings(max_examples=40)
def test_norm_against_determinant(x, e):
    K = NumberField((-3, 9, -6, 1))
    a = K(x, e)
    assert norm(a) == det_norm(a)


def test_norm_against_determinant_quintic(layer_fields):
    K = layer_fields[5]
    rng = random.Random(5)
    for _ in range(20):
        a = K([rng.randint(-9, 9) for _ in range(5)], rng.randint(0, 2))
        assert norm(a) == det_norm(a)


@given(coords3, coords3, st.integers(0, 2), st.integers(0, 2))
@settings(max_examples=80)
def test_ord_additive(x, y, e, f):
    K = NumberField((-3, 9, -6, 1))
    a, b = K(x, e), K(y, f)
    if a.is_zero() or b.is_zero():
        return
    ctx = InertPrimeContext(K)
    assert ord_at_q(ctx, a * b) == ord_at_q(ctx, a) + ord_at_q(ctx, b)


def _random_integral(K, rng, bound=50):
    while True:
        a = K([rng.randint(-bound, bound) for _ in range(K.degree)])
        if not a.is_zero():
            return a


@pytest.mark.parametrize("p", [3, 5, 7])
def test_norm_congruent_to_residue(layer_fields, p):
    K = layer_fields[p]
    ctx = RamifiedPrimeContext.find(K, p)
    rng = random.Random(1000 + p)
    failures = [a for a in (_random_integral(K, rng) for _ in range(500)) if not check_norm_residue(ctx, a)]
    assert failures == []


@pytest.mark.parametrize("p", [3, 5, 7])
def test_residue_is_ring_map(layer_fields, p):
    K = layer_fields[p]
    ctx = RamifiedPrimeContext.find(K, p)
    rng = random.Random(p)
    for _ in range(100):
        a, b = _random_integral(K, rng), _random_integral(K, rng)
        ra, rb = residue_at_p(ctx, a), residue_at_p(ctx, b)
        assert residue_at_p(ctx, a + b) == (ra + rb) % p
        assert residue_at_p(ctx, a * b) == ra * rb % p
    assert residue_at_p(ctx, K(Fraction(1, 2))) == pow(2, -1, p)


def test_contexts_reject_bad_input():
    with pytest.raises(InvalidContextError):
        RamifiedPrimeContext(NumberField((-3, 9, -6, 1)), 3, 1)
    with pytest.raises(InvalidContextError):
        RamifiedPrimeContext.find(NumberField((1, -3, 0, 1)), 5)
    # x^2 + x - 4: disc 17, 2 splits
    with pytest.raises(InvalidContextError):
        InertPrimeContext(NumberField((-4, 1, 1)))
    with pytest.raises(InconclusiveError):
        InertPrimeContext(NumberField((-2, 0, 1)))
    # degree 2 is not a power of 5
    K = NumberField((-5, 0, 1))
    with pytest.raises(ValueError):
        check_norm_residue(RamifiedPrimeContext(K, 5, 0), K.one)


def test_ord_rejects_zero(cubic_field):
    with pytest.raises(ValueError):
        ord_at_q(InertPrimeContext(cubic_field), cubic_field.zero)


def test_s_unit_predicate(cubic_field):
    K = cubic_field
    ctx = InertPrimeContext(K)
    assert is_s_unit(ctx, K(Fraction(1, 2)))
    assert is_s_unit(ctx, 2 - K.theta)
    assert not is_s_unit(ctx, K.theta)
    assert not is_s_unit(ctx, K.zero)


def test_splitting_pattern_against_sympy(layer_fields):
    x = sympy.symbols("x")
    for p, K in layer_fields.items():
        for q in (2, 11, 17, 19, 43, 101):
            if K.disc % q == 0:
                with pytest.raises(InconclusiveError):
                    splitting_pattern(K, q)
                continue
            _, facs = sympy.Poly(list(reversed(K.poly)), x, modulus=q).factor_list()
            assert list(splitting_pattern(K, q)) == sorted(g.degree() for g, _ in facs)
    assert splitting_pattern(layer_fields[3], 17).splits_completely
    assert splitting_pattern(layer_fields[5], 2).is_inert
