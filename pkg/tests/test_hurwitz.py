from fractions import Fraction

import pytest
from hypothesis import given, strategies as st
from mpmath import mp, mpf

from eulerap.errors import DomainError, PoleError
from eulerap.hurwitz import (
    hurwitz_pair,
    hurwitz_plan,
    hurwitz_zeta,
    riemann_zeta_logderiv,
    stieltjes0,
    stieltjes1,
    stieltjes_pair,
)
from eulerap.hurwitz import _hurwitz_pair

PREC = 200
TOL = mpf(2) ** -190


def _x(f):
    return mpf(f.numerator) / f.denominator


@pytest.mark.parametrize("s", [2, 3, Fraction(5, 2), 7])
@pytest.mark.parametrize("x", [Fraction(1, 3), Fraction(3, 4), Fraction(1, 12), Fraction(1)])
def test_against_mpmath(s, x):
    hv = hurwitz_pair(s, x, PREC)
    with mp.workprec(PREC + 30):
        sv = _x(Fraction(s))
        tol = TOL * _x(x) ** -sv  # the bound is relative to the leading term
        assert abs(hv.zeta - mp.zeta(sv, _x(x))) < tol
        assert abs(hv.dzeta - mp.zeta(sv, _x(x), derivative=1)) < tol


@pytest.mark.parametrize("d", [3, 4, 5, 12])
@pytest.mark.parametrize("s", [2, 3, 4])
def test_multiplication_theorem(d, s):
    with mp.workprec(PREC + 20):
        z = mp.zeta(s)
        dz = mp.zeta(s, derivative=1)
        tot = sum(hurwitz_pair(s, Fraction(a, d), PREC).zeta for a in range(1, d + 1))
        dtot = sum(hurwitz_pair(s, Fraction(a, d), PREC).dzeta for a in range(1, d + 1))
        assert abs(tot - mpf(d) ** s * z) < d * TOL * mpf(d) ** s
        assert abs(dtot - mpf(d) ** s * (mp.log(d) * z + dz)) < d * TOL * mpf(d) ** s * 4


@given(st.integers(min_value=1, max_value=30), st.integers(min_value=1, max_value=30),
       st.integers(min_value=2, max_value=6))
def test_doubling_cutoff_within_bound(num, den, s):
    # a plan at higher precision uses more terms; both answers must agree within the looser bound
    x = Fraction(min(num, den), max(num, den))
    lo = _hurwitz_pair(Fraction(s), x, 120)
    hi = _hurwitz_pair(Fraction(s), x, 240)
    assert hurwitz_plan(s, x, 240).N >= hurwitz_plan(s, x, 120).N
    with mp.workprec(260):
        assert abs(lo.zeta - hi.zeta) <= lo.error + hi.error
        assert abs(lo.dzeta - hi.dzeta) <= lo.error + hi.error


@pytest.mark.parametrize("x", [Fraction(1), Fraction(1, 2), Fraction(1, 7), Fraction(5, 12)])
def test_stieltjes_zero_is_minus_digamma(x):
    with mp.workprec(PREC + 20):
        assert abs(stieltjes0(x, PREC) + mp.digamma(_x(x))) < TOL


def test_stieltjes_one_at_one():
    with mp.workprec(PREC + 20):
        assert abs(stieltjes1(1, PREC) - mp.stieltjes(1)) < TOL


@pytest.mark.parametrize("x", [Fraction(1, 3), Fraction(3, 4), Fraction(1, 10)])
def test_laurent_expansion(x):
    lau = stieltjes_pair(x, PREC)
    with mp.workprec(80):
        c = abs(mp.stieltjes(2, _x(x))) / 2  # the h^2 coefficient
    ratios = []
    for h in (mpf("1e-3"), mpf("1e-4")):
        with mp.workprec(PREC + 20):
            z = hurwitz_zeta(1 + h, x, PREC)
            ratios.append(abs(z - 1 / h - lau.gamma0 + lau.gamma1 * h) / h**2)
    for r, h in zip(ratios, (mpf("1e-3"), mpf("1e-4"))):
        assert abs(r - c) < 100 * h


def test_zeta_logderiv_two():
    with mp.workprec(PREC + 20):
        ref = mp.zeta(2, derivative=1) / mp.zeta(2)
        assert abs(riemann_zeta_logderiv(2, PREC) - ref) < TOL


def test_domain():
    with pytest.raises(PoleError):
        hurwitz_zeta(1, Fraction(1, 2), 100)
    with pytest.raises(DomainError):
        hurwitz_zeta(Fraction(1, 2), Fraction(1, 2), 100)
    with pytest.raises(DomainError):
        hurwitz_zeta(2, Fraction(3, 2), 100)
