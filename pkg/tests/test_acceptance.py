"""End-to-end acceptance checks, one test per criterion.

Each test appends short notes to the ``criterion`` fixture; the PASS/FAIL
line for every criterion is printed in the terminal summary.
"""

import time
import warnings

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from mpmath import mp, mpf

from eulerap.apps import (
    appendix_gamma,
    empirical_estimate,
    euler_kronecker_q7,
    serre_constants,
    shanks_constants,
)
from eulerap.arith import character_group, euler_phi, units
from eulerap.gamma_ap import (
    check_sum_identity,
    e1_bound,
    e2_bound,
    gamma_da,
    gamma_da_closed_small,
    reduce_modulus,
    s2_sum,
    select_truncation,
)
from eulerap.lfun import log2_tail_log_power
from eulerap.numeric import truncate_decimal
from eulerap.primesums import PrimeSumSpec, prime_sum
from eulerap.sieve import primes_up_to

from reference_values import BETA0, BETA0_PRIME, GAMMA_40, GAMMA_K_Q7, GAMMA_M, GAMMA_N, SHANKS_C1
from test_gamma_ap import _indicator_s2

WIDE = 4000  # bits; comfortably above every precision compared below


def _diff(x, y):
    with mp.workprec(WIDE):
        return abs(mpf(x) - mpf(y))


@pytest.mark.criterion(1)
def test_reference_table_at_fifty_digits(criterion):
    t0 = time.perf_counter()
    bad = []
    for (d, a), ref in GAMMA_40.items():
        r = gamma_da(d, a, 50)
        assert r.certified_error < mpf(10) ** -50
        if truncate_decimal(r.value, 40) != ref:
            bad.append((d, a))
    criterion.append(f"{len(GAMMA_40) - len(bad)}/{len(GAMMA_40)} classes, {time.perf_counter() - t0:.1f}s")
    assert not bad, bad


@pytest.mark.criterion(2)
def test_closed_forms_against_general_engine(criterion):
    worst = mpf(0)
    for d, a in [(3, 1), (3, 2), (4, 1), (4, 3)]:
        closed = gamma_da_closed_small(d, a, 200)
        general = gamma_da(d, a, 100, engine="general")
        assert closed.certified_error < mpf(10) ** -200
        worst = max(worst, _diff(closed.value, general.value))
    criterion.append(f"max difference {mp.nstr(worst, 3)}")
    assert worst < mpf(10) ** -95


@pytest.mark.criterion(3)
def test_explicit_formulas_against_general_engine(criterion):
    count = 0
    for d in (5, 7, 8, 9, 12):
        for a in units(d):
            x, y = appendix_gamma(d, a, 40), gamma_da(d, a, 40)
            assert _diff(x.value, y.value) < x.error + y.certified_error, (d, a)
            count += 1
    criterion.append(f"{count} classes")


@pytest.mark.criterion(4)
def test_sum_over_classes_identity(criterion):
    worst = 0.0
    for d in range(1, 31):
        res = check_sum_identity(d, 30)
        assert res < euler_phi(d) * mpf(10) ** -28, d
        worst = max(worst, float(res / euler_phi(d)))
    criterion.append(f"max residual / phi(d) = {worst:.1e}")


@pytest.mark.criterion(5)
def test_modulus_reduction(criterion):
    checked = 0
    for d in range(3, 26, 2):
        for a in units(d):
            m = reduce_modulus(d, a)
            lhs = gamma_da(d, a, 30, reduce=False)
            rhs = gamma_da(m.double_modulus, m.b, 30, reduce=False)
            with mp.workprec(WIDE):
                assert abs(lhs.value - rhs.value - m.log2_multiple * mp.log(2)) < mpf(10) ** -28, (d, a)
            checked += 1
    g31, g32 = gamma_da(3, 1, 50), gamma_da(3, 2, 50)
    g61, g65 = gamma_da(6, 1, 50, reduce=False), gamma_da(6, 5, 50, reduce=False)
    with mp.workprec(WIDE):
        assert truncate_decimal(g61.value, 40) == truncate_decimal(g31.value, 40)
        assert truncate_decimal(g65.value, 40) == truncate_decimal(g32.value + mp.log(2), 40)
    criterion.append(f"{checked} odd classes, d = 6 identities to 40 decimals")


@pytest.mark.criterion(6)
def test_applications(criterion):
    q7 = euler_kronecker_q7(42)
    assert truncate_decimal(q7.values["gamma_K"], 39) == GAMMA_K_Q7
    serre = serre_constants(42)
    for key, ref in [("beta0", BETA0), ("gamma_M", GAMMA_M), ("beta0_prime", BETA0_PRIME), ("gamma_N", GAMMA_N)]:
        assert truncate_decimal(serre.values[key], 40) == ref, key
    shanks = shanks_constants(20)
    assert truncate_decimal(shanks.values["c1"], 9) == SHANKS_C1
    criterion.append("gamma_K 39 decimals, four d = 12 constants 40 decimals, c1 9 decimals")


@pytest.mark.criterion(7)
def test_budget_tightness(criterion):
    seen = []

    @settings(max_examples=100, derandomize=True, database=None)
    @given(st.integers(min_value=1, max_value=50), st.integers(min_value=2, max_value=30), st.data())
    def check(d, digits, data):
        b = select_truncation(d, digits)
        share = mpf(10) ** -digits / 4
        assert e1_bound(b.P, b.K) == b.e1_bound <= share
        assert e2_bound(b.P, b.J) == b.e2_bound <= share
        assert b.tail_bound < mpf(10) ** -digits
        a = data.draw(st.sampled_from(units(d)))
        lo, hi = gamma_da(d, a, digits), gamma_da(d, a, digits + 15)
        assert _diff(lo.value, hi.value) < mpf(10) ** -digits
        seen.append((d, digits))

    check()
    criterion.append(f"{len(seen)} budgets, {len(set(seen))} distinct")


@pytest.mark.criterion(8)
def test_brute_force_oracles(criterion):
    with mp.workprec(300):
        for a in units(5):
            assert abs(s2_sum(5, a, 100, 250) - _indicator_s2(5, a, 100)) < mpf(10) ** -25
    x = 10**6
    tail = 2 * 2 ** log2_tail_log_power(x, 2)
    for kind, d, a, s, fn in [("b", 4, 3, 1, lambda p: np.log(p) / (p * (p - 1))),
                              ("b", 12, 5, 1, lambda p: np.log(p) / (p * (p - 1))),
                              ("c", 7, 2, 3, lambda p: -np.log(p) / (p**3 - 1)),
                              ("c", 5, 4, 2, lambda p: -np.log(p) / (p**2 - 1))]:
        r = prime_sum(PrimeSumSpec(kind, s, 25, d, a))
        ps = primes_up_to(x, (d, a)).to_array().astype(np.float64)
        assert abs(float(r.value) - float(np.sum(fn(ps)))) <= tail + float(r.error) + 1e-12
    for d in range(1, 101):
        g = character_group(d)
        for a in units(d):
            for n in range(d):
                assert g.orthogonality_sum(a, n) == (1 if n % d == a % d else 0)
    criterion.append("S2 d = 5, sums to 1e6, orthogonality d <= 100")


@pytest.mark.criterion(9)
def test_high_precision_smoke(criterion):
    t0 = time.perf_counter()
    big = gamma_da_closed_small(3, 1, 1000)
    mid = gamma_da_closed_small(3, 1, 500)
    assert big.certified_error < mpf(10) ** -1000
    assert _diff(big.value, mid.value) <= mid.certified_error + big.certified_error
    criterion.append(f"1000 digits in {time.perf_counter() - t0:.1f}s; full-scale runs are out of reach by design")


@pytest.mark.criterion(10)
def test_empirical_estimator(criterion):
    t0 = time.perf_counter()
    n = primes_up_to(10**8).count()
    rate = 10**8 / (time.perf_counter() - t0)
    assert n == 5761455
    assert rate >= 1e7
    flagged = []
    worst = 0.0
    for d in range(1, 13):
        for a in units(d):
            dist = abs(empirical_estimate(d, a, 1e8) - float(gamma_da(d, a, 20).value))
            worst = max(worst, dist)
            if dist >= 0.05:
                flagged.append((d, a, dist))
    if flagged:
        # the estimator carries no error bound: flag for review, do not fail
        warnings.warn(f"empirical estimates off by >= 0.05: {flagged}")
    criterion.append(f"throughput {rate:.2e}/s, max distance {worst:.1e}, {len(flagged)} flagged")
