from fractions import Fraction

import pytest
from hypothesis import given, strategies as st
from mpmath import mp, mpf

from eulerap.numeric import (
    agm,
    bernoulli,
    digits_to_prec,
    error_string,
    euler_gamma_const,
    gamma_one_third,
    gauss_constant,
    log_gamma,
    truncate_decimal,
)

# mpmath.gamma / mpmath.agm at 400 bits, frozen
GAUSS_G = "0.83462684167407318628142973279904680899399301349034"
GAMMA_THIRD = "2.6789385347077476336556929409746776441286893779573"


def _close(x, ref, bits):
    with mp.workprec(bits + 20):
        return abs(mpf(x) - mpf(ref)) < mpf(2) ** -bits


def test_digits_to_prec_counts_guard_and_terms():
    base = digits_to_prec(50)
    assert base >= 167 + 64
    assert digits_to_prec(50, 1024) == base + 10


def test_gauss_constant_frozen():
    assert _close(gauss_constant(200), GAUSS_G, 160)


def test_gamma_one_third_frozen():
    assert _close(gamma_one_third(200), GAMMA_THIRD, 160)


def test_euler_gamma_matches_mpmath():
    with mp.workprec(300):
        assert abs(euler_gamma_const(300) - mp.euler) < mpf(2) ** -290


@pytest.mark.parametrize("x", [Fraction(1, 4), Fraction(1, 3), Fraction(7, 5), Fraction(11, 2), 30])
def test_log_gamma_against_mpmath(x):
    with mp.workprec(260):
        ref = mp.loggamma(mpf(x.numerator) / x.denominator if isinstance(x, Fraction) else x)
        assert abs(log_gamma(x, 240) - ref) < mpf(2) ** -230


@given(st.fractions(min_value=Fraction(1, 10), max_value=100), st.fractions(min_value=Fraction(1, 10), max_value=100))
def test_agm_symmetric(a, b):
    with mp.workprec(140):
        x, y = mpf(a.numerator) / a.denominator, mpf(b.numerator) / b.denominator
        u, v = agm(x, y, 120), agm(y, x, 120)
        assert abs(u - v) <= mpf(2) ** -110 * u


@given(st.fractions(min_value=Fraction(1, 10), max_value=50), st.integers(min_value=2, max_value=1000))
def test_agm_homogeneous(a, lam):
    with mp.workprec(140):
        x = mpf(a.numerator) / a.denominator
        assert abs(agm(lam * x, lam, 120) - lam * agm(x, 1, 120)) <= mpf(2) ** -108 * lam * x


def test_precision_monotonicity():
    lo, hi = 150, 300
    for f in (gauss_constant, gamma_one_third, euler_gamma_const):
        assert truncate_decimal(f(lo), 40) == truncate_decimal(f(hi), 40)


def test_bernoulli_recurrence():
    # sum_{k=0}^{n} C(n+1, k) B_k = 0 for n >= 1
    from math import comb
    for n in range(1, 65):
        assert sum(comb(n + 1, k) * bernoulli(k) for k in range(n + 1)) == 0


def test_bernoulli_known():
    assert bernoulli(0) == 1
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(12) == Fraction(-691, 2730)
    assert bernoulli(7) == 0


def test_truncate_decimal_toward_zero():
    with mp.workprec(200):
        assert truncate_decimal(mpf(2) / 3, 5) == "0.66666"
        assert truncate_decimal(-mpf(2) / 3, 5) == "-0.66666"
        assert truncate_decimal(mpf("-0.000001"), 3) == "0.000"  # no signed zero


@pytest.mark.parametrize("err,expect", [(5.81e-52, "5.9e-52"), (9.99e-3, "1.0e-2"), (2.0**-10, "9.8e-4")])
def test_error_string_rounds_up(err, expect):
    assert error_string(mpf(err)) == expect
