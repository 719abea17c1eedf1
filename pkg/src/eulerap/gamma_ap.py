"""Euler constants gamma(d, a) of the Euler products over primes p = a (mod d).

The general engine writes

    gamma(d, a) = gamma_1(d, a) + S_2(P) + S_5(P, K, J) + E_1 + E_2

where gamma_1 collects Euler's constant, the primes dividing d and L'/L(1, chi);
S_2 is a finite sum over primes p <= P; S_5 is a finite combination of
L_P'/L_P(kj, chi^j) values; and |E_1|, |E_2| are bounded in closed form by the
truncation points K and J. Everything that depends only on the character (not
on a) is computed once per modulus and shared across residue classes.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from functools import lru_cache

from mpmath import mp, mpc, mpf

from .arith import (
    ResidueClass,
    char_power_order,
    character_group,
    euler_phi,
    first_exponent,
    mobius,
    multiplicative_order,
    prime_divisors,
    units,
)
from .errors import BudgetError, CertificationError, DomainError
from .lfun import lfun_P_logderiv_certified, lfun_value
from .numeric import digits_to_prec, euler_gamma_const, gamma_one_third, gauss_constant
from .primesums import quad_residue_sum, real_tolerance
from .sieve import small_primes

DEFAULT_CUTOFF = 1 << 10
_LOG2_10 = math.log2(10)


# -- truncation budget

def e1_bound(P: int, K: int) -> mpf:
    """2 log P / ((K - 1) P^(K-1) (P - 1)), bounding the k > K tail."""
    with mp.workprec(64):
        return 2 * mp.log(P) / ((K - 1) * mpf(P) ** (K - 1) * (P - 1))


def e2_bound(P: int, J: int) -> mpf:
    """2 / (P^(J-1) (P^(J+1) - 1)), bounding the j > J tail."""
    with mp.workprec(64):
        return 2 / (mpf(P) ** (J - 1) * (mpf(P) ** (J + 1) - 1))


@dataclass(frozen=True)
class TruncationBudget:
    """Truncation points (P, K, J) for ``digits`` decimals and the resulting tail bounds."""

    digits: int
    P: int
    K: int
    J: int
    e1_bound: mpf
    e2_bound: mpf

    @property
    def tail_bound(self) -> mpf:
        return self.e1_bound + self.e2_bound


def select_truncation(d: int, digits: int, P: int = DEFAULT_CUTOFF) -> TruncationBudget:
    """Fix P, then the least K and J with each tail below 10^-digits / 4.

    The bounds do not depend on d; it is validated only. For fixed P both K and
    J are nondecreasing in ``digits``.
    """
    if d < 1:
        raise DomainError("modulus must be positive")
    if digits < 2:
        raise DomainError("at least two digits are required")
    if P < 3:
        raise DomainError("the prime cutoff must be at least 3")
    share = -digits * _LOG2_10 - 2
    lp = math.log2(P)
    K = 2
    while math.log2(2 * math.log(P) / ((K - 1) * (P - 1))) - (K - 1) * lp > share:
        K += 1
    J = 1
    while 1 - (J - 1) * lp - (J + 1) * lp - math.log2(1 - P ** -(J + 1)) > share:
        J += 1
    b = TruncationBudget(digits, P, K, J, e1_bound(P, K), e2_bound(P, J))
    if b.tail_bound >= mpf(10) ** -digits:
        raise BudgetError("truncation bounds exceed the target")
    return b


# -- results

@dataclass(frozen=True)
class GammaComponents:
    gamma1: mpf
    s2: mpf
    s5: mpf


@dataclass(frozen=True)
class GammaResult:
    """gamma(d, a) with a certified absolute error and how it was obtained."""

    residue: ResidueClass
    value: mpf
    certified_error: mpf
    budget: TruncationBudget | None = None
    components: GammaComponents | None = None
    wall_time: float = 0.0
    engine: str = "general"
    notes: tuple[str, ...] = field(default_factory=tuple)


def _working_prec(d: int, digits: int, budget: TruncationBudget | None = None) -> int:
    terms = euler_phi(d) * (64 + (budget.P + budget.K * budget.J if budget else 0))
    return digits_to_prec(digits, terms)


def _real(z, digits: int, what: str) -> mpf:
    if isinstance(z, mpc):
        if abs(z.imag) >= real_tolerance(digits):
            raise CertificationError(f"{what}: imaginary part {mp.nstr(z.imag, 5)} is not negligible")
        return z.real
    return z


def _divisor_term(d: int, prec: int) -> mpf:
    with mp.workprec(prec):
        return sum((mp.log(p) / (p - 1) for p in prime_divisors(d)), mpf(0))


# -- per-character rows, shared by every a mod d

@dataclass(frozen=True)
class _CharacterRow:
    logderiv1: mpc
    s2: mpc
    s5: mpc
    error: mpf


@lru_cache(maxsize=256)
def _character_rows(d: int, P: int, K: int, J: int, prec: int) -> tuple[_CharacterRow, ...]:
    group = character_group(d)
    wp = prec + 16
    primes = small_primes(P)
    rows = []
    for chi in group.nonprincipal():
        lv = lfun_value(1, chi, prec)
        err = lv.certified_error
        with mp.workprec(wp):
            s2 = mpc(0)
            for p in primes:
                if chi(p) < 0:
                    continue
                c = chi.value(p, wp)
                lp = mp.log(p)
                s2 += c * lp / p * (c / (p - c) - mpf(1) / (p - 1))
        s5 = mpc(0)
        for j in range(1, J + 1):
            mu = mobius(j)
            if mu == 0:
                continue
            nu = char_power_order(chi, j)
            chi_j = chi.power(j)
            for k in range(2, K + 1):
                if (k - 1) % nu == 0:
                    continue
                v1, e1 = lfun_P_logderiv_certified(k * j, chi.power(k * j), P, prec)
                v2, e2 = lfun_P_logderiv_certified(k * j, chi_j, P, prec)
                with mp.workprec(wp):
                    s5 += mu * (v1 - v2)
                    err += e1 + e2
        rows.append(_CharacterRow(lv.logderiv, s2, s5, err))
    return tuple(rows)


def gamma1_da(d: int, a: int, prec: int) -> mpf:
    """gamma_1(d, a) = phi(d)^-1 (gamma + sum_{p | d} log p/(p-1) + sum_{chi != chi_0} conj chi(a) L'/L(1, chi))."""
    return _gamma1(ResidueClass(d, a), prec)[0]


def _gamma1(rc: ResidueClass, prec: int) -> tuple[mpf, mpf]:
    d, a = rc.d, rc.a
    if d < 2:
        raise DomainError("gamma_1 is defined for d >= 2")
    group = character_group(d)
    wp = prec + 16
    total = mpc(0)
    err = mpf(0)
    for chi in group.nonprincipal():
        lv = lfun_value(1, chi, prec)
        with mp.workprec(wp):
            total += chi.conj().value(a, wp) * lv.logderiv
            err += lv.certified_error
    with mp.workprec(wp):
        val = euler_gamma_const(wp) + _divisor_term(d, wp) + total
        digits = max(1, int((prec - 64) / _LOG2_10))
        return _real(val, digits, "gamma_1") / len(group), err / len(group) + mp.ldexp(1, -prec)


def s2_sum(d: int, a: int, P: int, prec: int) -> mpf:
    """S_2 = phi^-1 sum_{chi != chi_0} conj chi(a) sum_{p <= P} (chi(p) log p / p)(chi(p)/(p - chi(p)) - 1/(p - 1))."""
    rc = ResidueClass(d, a)
    group = character_group(d)
    wp = prec + 16
    total = mpc(0)
    with mp.workprec(wp):
        for chi in group.nonprincipal():
            inner = mpc(0)
            for p in small_primes(P):
                if chi(p) < 0:
                    continue
                c = chi.value(p, wp)
                inner += c * mp.log(p) / p * (c / (p - c) - mpf(1) / (p - 1))
            total += chi.conj().value(rc.a, wp) * inner
        digits = max(1, int((prec - 64) / _LOG2_10))
        return _real(total, digits, "S_2") / len(group)


def s5_sum(d: int, a: int, budget: TruncationBudget, prec: int, skip: bool = True) -> mpf:
    """S_5 = -phi^-1 sum_{chi != chi_0} conj chi(a) sum_{j <= J} mu(j) sum_{2 <= k <= K} (L_P'/L_P(kj, chi^kj) - L_P'/L_P(kj, chi^j)).

    With ``skip`` the terms with mu(j) = 0 or k = 1 (mod nu(chi^j)) are not
    evaluated, since they vanish identically.
    """
    rc = ResidueClass(d, a)
    group = character_group(d)
    P, K, J = budget.P, budget.K, budget.J
    wp = prec + 16
    total = mpc(0)
    for chi in group.nonprincipal():
        inner = mpc(0)
        for j in range(1, J + 1):
            mu = mobius(j)
            if skip and mu == 0:
                continue
            nu = char_power_order(chi, j)
            for k in range(2, K + 1):
                if skip and (k - 1) % nu == 0:
                    continue
                v1 = lfun_P_logderiv_certified(k * j, chi.power(k * j), P, prec)[0]
                v2 = lfun_P_logderiv_certified(k * j, chi.power(j), P, prec)[0]
                with mp.workprec(wp):
                    inner += mu * (v1 - v2)
        with mp.workprec(wp):
            total += chi.conj().value(rc.a, wp) * inner
    with mp.workprec(wp):
        digits = max(1, int((prec - 64) / _LOG2_10))
        return -_real(total, digits, "S_5") / len(group)


# -- entry points

def _trivial(rc: ResidueClass, digits: int, t0: float) -> GammaResult:
    prec = digits_to_prec(digits)
    with mp.workprec(prec + 16):
        val = euler_gamma_const(prec + 16)
        if rc.d == 2:
            val += mp.log(2)
        return GammaResult(rc, +val, mp.ldexp(1, -prec), wall_time=time.perf_counter() - t0,
                           engine="closed-form")


def gamma_da(d: int, a: int, digits: int, engine: str = "general", P: int = DEFAULT_CUTOFF,
             reduce: bool = True) -> GammaResult:
    """gamma(d, a) with certified error below 10^-digits (plus a rounding margin far smaller).

    ``engine`` is ``general`` (the character/L_P algorithm), ``closed`` (d in
    {3, 4} only) or ``auto`` (closed forms whenever they exist). With ``reduce``
    a modulus d = 2 (mod 4) is replaced by d/2 first.
    """
    t0 = time.perf_counter()
    rc = ResidueClass(d, a)
    if engine not in ("general", "closed", "auto"):
        raise DomainError(f"unknown engine {engine!r}")
    if rc.d <= 2:
        return _trivial(rc, digits, t0)
    if reduce and rc.d % 4 == 2:
        half = rc.d // 2
        base = gamma_da(half, rc.a % half or half, digits, engine, P, reduce)
        val, note = base.value, f"reduced from modulus {half}"
        if (rc.a - 2) % half == 0:
            with mp.workprec(_working_prec(rc.d, digits) + 16):
                val = val + mp.log(2)
        return GammaResult(rc, val, base.certified_error, base.budget, base.components,
                           time.perf_counter() - t0, base.engine, base.notes + (note,))
    if engine == "closed" or (engine == "auto" and rc.d in (3, 4)):
        res = gamma_da_closed_small(rc.d, rc.a, digits)
        return GammaResult(rc, res.value, res.certified_error, wall_time=time.perf_counter() - t0,
                           engine="closed-form")
    budget = select_truncation(rc.d, digits, P)
    prec = _working_prec(rc.d, digits, budget)
    rows = _character_rows(rc.d, budget.P, budget.K, budget.J, prec)
    group = character_group(rc.d)
    phi = len(group)
    wp = prec + 16
    with mp.workprec(wp):
        g1 = mpc(0)
        s2 = mpc(0)
        s5 = mpc(0)
        err = mpf(0)
        for chi, row in zip(group.nonprincipal(), rows):
            c = chi.conj().value(rc.a, wp)
            g1 += c * row.logderiv1
            s2 += c * row.s2
            s5 -= c * row.s5
            err += row.error
        g1 = (euler_gamma_const(wp) + _divisor_term(rc.d, wp) + _real(g1, digits, "gamma_1")) / phi
        s2 = _real(s2, digits, "S_2") / phi
        s5 = _real(s5, digits, "S_5") / phi
        value = g1 + s2 + s5
        err = err / phi + budget.tail_bound + mp.ldexp(1, -prec + 8)
    return GammaResult(rc, value, err, budget, GammaComponents(g1, s2, s5),
                       time.perf_counter() - t0, "general")


def gamma_da_closed_small(d: int, a: int, digits: int) -> GammaResult:
    """gamma(3, a) and gamma(4, a) from log Gamma(1/3), Gauss's constant and a quadratic prime sum."""
    t0 = time.perf_counter()
    rc = ResidueClass(d, a)
    if rc.d not in (3, 4):
        raise DomainError("closed forms exist for d = 3 and d = 4 only")
    q = quad_residue_sum(rc.d, digits + 2)
    prec = digits_to_prec(digits, 16) + 16
    with mp.workprec(prec):
        g = euler_gamma_const(prec)
        if rc.d == 3:
            lg = mp.log(gamma_one_third(prec))
            first = g - mp.log(3) / 2 - 3 * lg + 2 * mp.log(2 * mp.pi)
            value = first + q.value if rc.a == 1 else g + mp.log(3) / 2 - first - q.value
        else:
            lG = mp.log(gauss_constant(prec))
            value = g - lG + q.value if rc.a == 1 else lG + mp.log(2) - q.value
        err = q.error + mp.ldexp(1, -prec + 8)
    return GammaResult(rc, value, err, wall_time=time.perf_counter() - t0, engine="closed-form")


def gamma_row(d: int, digits: int, engine: str = "general", P: int = DEFAULT_CUTOFF) -> list[GammaResult]:
    """gamma(d, a) for every primitive class a mod d."""
    return [gamma_da(d, a, digits, engine, P) for a in units(d)]


def check_sum_identity(d: int, digits: int, engine: str = "general") -> mpf:
    """|sum_a gamma(d, a) - gamma - sum_{p | d} log p / (p - 1)|."""
    if d < 1:
        raise DomainError("modulus must be positive")
    rows = gamma_row(d, digits, engine)
    prec = _working_prec(d, digits) + 16
    with mp.workprec(prec):
        total = sum((r.value for r in rows), mpf(0))
        return abs(total - euler_gamma_const(prec) - _divisor_term(d, prec))


@dataclass(frozen=True)
class ModulusReduction:
    """gamma(d, a) = gamma(2d, b) + log2_multiple * log 2."""

    d: int
    a: int
    double_modulus: int
    b: int
    log2_multiple: int


def reduce_modulus(d: int, a: int) -> ModulusReduction:
    """Relate gamma(d, a) for odd d to the constant of the odd lift of a modulo 2d."""
    if d < 3 or d % 2 == 0:
        raise DomainError("modulus reduction applies to odd d >= 3")
    rc = ResidueClass(d, a)
    b = rc.a if rc.a % 2 else rc.a + d
    shift = -1 if (rc.a - 2) % d == 0 else 0
    return ModulusReduction(d, rc.a, 2 * d, b, shift)


@dataclass(frozen=True)
class ResortTerm:
    """Primes p = b (mod d) whose powers p^k = a (mod d) occur for k = e, e + nu, e + 2 nu, ..."""

    b: int
    order: int
    first: int


def prime_power_resort(d: int, a: int) -> list[ResortTerm]:
    """Classes b with a in <b>, with nu_d(b) and the least exponent e_b >= 2 with b^e_b = a."""
    rc = ResidueClass(d, a)
    out = []
    for b in units(rc.d):
        e = first_exponent(b, rc.a, rc.d)
        if e is not None:
            out.append(ResortTerm(b, multiplicative_order(b, rc.d), e))
    return out
