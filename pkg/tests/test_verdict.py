import pytest
import sympy

from zpfermat.arith import is_perfect_square
from zpfermat.c5fields import fields_of_conductor
from zpfermat.cyclotomic import layer_polynomial
from zpfermat.verdict import (
    CITATIONS,
    asymptotic_flt_verdict,
    certify_general_field,
    eisenstein_shift,
    is_wieferich,
    wieferich_scan,
)

from conftest import QUINTIC_EXAMPLE


def test_scan_against_naive_loop():
    naive = [p for p in sympy.primerange(3, 20001) if pow(2, p - 1, p * p) == 1]
    assert wieferich_scan(2, 20000) == naive == [1093, 3511]


def test_scan_segment_and_worker_invariance():
    ref = wieferich_scan(2, 200000)
    assert wieferich_scan(2, 200000, segment=997) == ref
    assert wieferich_scan(2, 200000, workers=2, segment=4096) == ref
    assert wieferich_scan(1093, 1093) == [1093]
    assert wieferich_scan(1094, 3510) == []


def test_scan_consistent_with_pointwise_check():
    for p in sympy.primerange(3, 5000):
        assert is_wieferich(p) == (p in (1093, 3511))


def test_wieferich_argument_errors():
    for bad in (2, 4, 1):
        with pytest.raises(ValueError):
            is_wieferich(bad)
    with pytest.raises(ValueError):
        wieferich_scan(10, 5)


@pytest.mark.parametrize(
    "p,status",
    [(2, "effective-holds"), (3, "open"), (5, "effective-holds"), (7, "effective-holds"), (1093, "open"), (3511, "open"), (11, "effective-holds")],
)
def test_verdicts(p, status):
    vs = [asymptotic_flt_verdict(p, n) for n in (1, 2, 3, 10)]
    assert {v.status for v in vs} == {status}
    assert len({tuple(v.reasons) for v in vs}) == 1
    for v in vs:
        assert v.citations and set(v.citations) <= set(CITATIONS)
        assert "lem:inertZp" in v.citations


def test_verdict_argument_errors():
    with pytest.raises(ValueError):
        asymptotic_flt_verdict(9, 1)
    with pytest.raises(ValueError):
        asymptotic_flt_verdict(5, 0)


def test_certify_example_quintic():
    rep = certify_general_field(list(QUINTIC_EXAMPLE), 5)
    assert rep.overall == "certified-evidence"
    assert all(c.status == "pass" for c in rep.checks.values())
    q, r = divmod(rep.disc, 5**8 * 11**4)
    assert r == 0 and is_perfect_square(q)
    assert rep.to_dict()["citations"] == ["thm:general"]


def test_certify_controls():
    rep = certify_general_field([-2, 0, 0, 0, 0, 1], 5)
    assert rep.checks["galois_evidence"].status == "fail"
    assert rep.checks["totally_real"].status == "fail"
    assert rep.overall == "failed"

    rep = certify_general_field([1, -3, 0, 1], 3)
    failing = [k for k, c in rep.checks.items() if c.status != "pass"]
    assert failing == ["p_at_least_5"] and rep.overall == "failed"

    assert certify_general_field([-2, 0, 1], 5).overall == "failed"


@pytest.mark.parametrize("p", [5, 7])
def test_certify_layers(p):
    assert certify_general_field(layer_polynomial(p, 1), p).overall == "certified-evidence"


def test_certify_two_split_control():
    # 2 splits completely here, so 2 | disc(f) for any defining polynomial;
    # the failure is certified by a 2-adic root
    split = [f for f in fields_of_conductor(25 * 31, (31,)) if not f.two_inert]
    assert split
    rep = certify_general_field(split[0].poly, 5)
    assert rep.checks["two_inert"].status == "fail"
    assert rep.checks["galois_evidence"].status == "pass"
    assert rep.overall == "failed"


def test_certify_unramified_prime_and_inconclusive():
    f = layer_polynomial(5, 1)  # disc 5^8 7^2
    rep = certify_general_field(f, 7)
    assert rep.checks["degree_is_prime_power"].status == "fail"
    assert rep.checks["totally_ramified_at_p"].status == "inconclusive"
    rep = certify_general_field(f, 11)
    assert rep.checks["totally_ramified_at_p"].status == "fail"


def test_two_adic_root():
    from zpfermat.verdict import two_adic_root

    assert two_adic_root([7, 0, 1]) is not None  # -7 is a square in Q_2
    assert two_adic_root([-3, 0, 1]) is None  # 3 is not
    assert two_adic_root([-2, 0, 1]) is None
    assert two_adic_root([1, 1, 0, 1]) is None  # irreducible mod 2
    from zpfermat.arith import v2

    r = two_adic_root([-17, 0, 1])
    assert v2(r * r - 17) > 2 * v2(2 * r)


def test_two_inert_inconclusive_without_root():
    # x^2 - 3: 2 ramifies, disc 12, no 2-adic root
    rep = certify_general_field([-3, 0, 1], 5)
    assert rep.checks["two_inert"].status == "inconclusive"


def test_eisenstein_shift():
    assert eisenstein_shift(list(QUINTIC_EXAMPLE), 5) == 1
    assert eisenstein_shift([-3, 9, -6, 1], 3) == 0
    assert eisenstein_shift([1, -3, 0, 1], 3) == 2
    assert eisenstein_shift([1, 0, 1], 3) is None


def test_certify_argument_errors():
    with pytest.raises(ValueError):
        certify_general_field([1, 2], 4)
    with pytest.raises(ValueError):
        certify_general_field([1, 0, 2], 5)
