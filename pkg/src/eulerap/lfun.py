"""Dirichlet L-values and logarithmic derivatives through Hurwitz zeta at a/d.

L(s, chi) = d^-s sum_a chi(a) zeta(s, a/d) for s > 1, and at s = 1 (chi non-principal)

    L(1, chi)  = d^-1 sum_a chi(a) gamma_0(a/d)
    L'(1, chi) = -log(d) L(1, chi) - d^-1 sum_a chi(a) gamma_1(a/d).

The sums run over every a coprime to d, so imprimitive characters need no
special treatment. ``L_P`` denotes L with the Euler factors p <= P removed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from mpmath import mp, mpc, mpf

from .arith import DirichletCharacter, primitive_lift, prime_divisors, units
from .errors import CertificationError, DomainError, PoleError
from .hurwitz import _as_key, hurwitz_pair, stieltjes_pair
from .sieve import small_primes

_LOG2E = 1 / math.log(2)


@dataclass(frozen=True)
class LValue:
    """L(s, chi), L'(s, chi) and L'/L(s, chi); ``certified_error`` bounds the log-derivative.

    ``value_error`` bounds the error in L itself.
    """

    character: DirichletCharacter
    s: object
    value: mpc
    derivative: mpc
    logderiv: mpc
    certified_error: mpf
    value_error: mpf = mpf(0)


# -- tail bounds (log2 domain so that 10^-1000-size quantities stay representable)

def log2_tail_log_power(P: float, alpha: float) -> float:
    """log2 of P^(1-a) (log P/(a-1) + 1/(a-1)^2), which bounds sum_{n>P} log(n)/n^a for P >= 3."""
    a1 = alpha - 1
    return ((1 - alpha) * math.log(P) + math.log(math.log(P) / a1 + 1 / a1**2)) * _LOG2E


def log2_tail_power(P: float, alpha: float) -> float:
    """log2 of P^(1-a) / (a-1), which bounds sum_{n>P} 1/n^a."""
    return ((1 - alpha) * math.log(P) - math.log(alpha - 1)) * _LOG2E


def log2_lp_logderiv_bound(P: float, sigma: float) -> float:
    """Bound for |L_P'/L_P(s, chi)| <= sum_{p>P} log p / (p^sigma - 1)."""
    P = max(P, 3)
    return log2_tail_log_power(P, sigma) - math.log2(1 - P ** -sigma)


def log2_log_lp_bound(P: float, sigma: float) -> float:
    """Bound for |log L_P(s, chi)| <= sum_{n>P} 1/(n^sigma - 1)."""
    P = max(P, 3)
    return log2_tail_power(P, sigma) - math.log2(1 - P ** -sigma)


def log_lfun_P_lemma_bound(P: int, sigma) -> mpf:
    """The bound 2 P^(1-sigma) / (sigma - 1) for |log L_P(s, chi)|, sigma > 1."""
    sigma = mpf(sigma)
    return 2 * mpf(P) ** (1 - sigma) / (sigma - 1)


# -- Hurwitz rows

def _x(a: int, d: int) -> Fraction:
    return Fraction(a, d)


@lru_cache(maxsize=8192)
def _hurwitz_row(d: int, s, prec: int):
    return [(a, hurwitz_pair(s, _x(a, d), prec)) for a in units(d)]


@lru_cache(maxsize=1024)
def _laurent_row(d: int, prec: int):
    return [(a, stieltjes_pair(_x(a, d), prec)) for a in units(d)]


def _float(s) -> float:
    return float(Fraction(s)) if isinstance(s, str) else float(s)


def lfun_value(s, chi: DirichletCharacter, prec: int) -> LValue:
    """L, L' and L'/L at s = 1 (non-principal chi) or real s > 1."""
    return _lfun_value(_as_key(s), chi, prec)


@lru_cache(maxsize=65536)
def _lfun_value(s, chi: DirichletCharacter, prec: int) -> LValue:
    d = chi.modulus
    wp = prec + 16 + d.bit_length()
    if s == 1:
        if chi.is_principal:
            raise PoleError("L(s, chi_0) has a pole at s = 1")
        row = _laurent_row(d, wp)
        with mp.workprec(wp):
            s0 = mpc(0)
            s1 = mpc(0)
            err = mpf(0)
            for a, lau in row:
                c = chi.value(a, wp)
                s0 += c * lau.gamma0
                s1 += c * lau.gamma1
                err += lau.error
            L = s0 / d
            Lp = -mp.log(d) * L - s1 / d
            eL = err / d
            eLp = eL * (mp.log(d) + 1)
    else:
        if _float(s) <= 1:
            raise DomainError("L-values are evaluated only at s = 1 or real s > 1")
        row = _hurwitz_row(d, s, wp)
        with mp.workprec(wp):
            sv = mpf(s.numerator) / s.denominator if isinstance(s, Fraction) else mpf(s)
            ds = mpf(d) ** (-sv)
            z = mpc(0)
            dz = mpc(0)
            err = mpf(0)
            for a, hv in row:
                c = chi.value(a, wp)
                z += c * hv.zeta
                dz += c * hv.dzeta
                err += hv.error
            L = ds * z
            Lp = -mp.log(d) * L + ds * dz
            eL = ds * err
            eLp = eL * (mp.log(d) + 1)
    with mp.workprec(wp):
        absL = abs(L)
        if absL <= 2 * eL:
            raise CertificationError(f"L(s, chi) indistinguishable from 0 at s = {s}")
        ld = Lp / L
        eld = (eLp + abs(ld) * eL) / (absL - eL) + mp.ldexp(absL, -wp + 8)
    return LValue(chi, s, L, Lp, ld, eld, eL)


def lfun_logderiv(s, chi: DirichletCharacter, prec: int) -> mpc:
    """L'/L(s, chi) at s = 1 (chi != chi_0) or s > 1."""
    return lfun_value(s, chi, prec).logderiv


def imprimitive_correction(chi: DirichletCharacter, s, prec: int) -> mpc:
    """sum_{p | d} chi*(p) log p / (p^s - chi*(p)), where chi* is the primitive lift.

    Adding it to L'/L(s, chi*) gives L'/L(s, chi).
    """
    star, _ = primitive_lift(chi)
    with mp.workprec(prec + 16):
        sv = mpf(Fraction(s).numerator) / Fraction(s).denominator
        total = mpc(0)
        for p in prime_divisors(chi.modulus):
            c = star.value(p, prec + 16)
            if c != 0:
                total += c * mp.log(p) / (mpf(p) ** sv - c)
        return total


# -- Euler-product-truncated variants

def _prime_cut(P: int, sigma: float, prec: int) -> int:
    """Largest prime bound X <= P beyond which every term log p/(p^sigma-1) is below 2^-(prec+16)."""
    x = 2 ** ((prec + 16) / sigma) if sigma * math.log2(P) > prec + 16 else P
    return int(min(P, max(3, x)))


def lfun_P_logderiv_certified(s, chi: DirichletCharacter, P: int, prec: int) -> tuple[mpc, mpf]:
    """L_P'/L_P(s, chi) = L'/L(s, chi) + sum_{p<=P} chi(p) log p / (p^s - chi(p)), with error bound."""
    return _lp_logderiv(_as_key(s), chi, int(P), prec)


@lru_cache(maxsize=262144)
def _lp_logderiv(s, chi: DirichletCharacter, P: int, prec: int) -> tuple[mpc, mpf]:
    sigma = _float(s)
    if sigma <= 1:
        raise DomainError("L_P'/L_P is evaluated for s > 1 only")
    bound = log2_lp_logderiv_bound(max(P, 1), sigma)
    if P >= 3 and bound < -prec - 8:
        return mpc(0), mp.ldexp(1, math.ceil(bound) + 1)
    lv = lfun_value(s, chi, prec)
    wp = prec + 16
    X = _prime_cut(P, sigma, prec)
    with mp.workprec(wp):
        sv = mpf(s.numerator) / s.denominator if isinstance(s, Fraction) else mpf(s)
        total = lv.logderiv
        for p in small_primes(X):
            e = chi(p)
            if e < 0:
                continue
            c = chi.value(p, wp)
            total += c * mp.log(p) / (mpf(p) ** sv - c)
        err = lv.certified_error
        if X < P:
            err += mp.ldexp(1, math.ceil(log2_lp_logderiv_bound(X, sigma)) + 1)
        err += mp.ldexp(1, -prec)
    return total, err


def lfun_P_logderiv(s, chi: DirichletCharacter, P: int, prec: int) -> mpc:
    return lfun_P_logderiv_certified(s, chi, P, prec)[0]


def log_lfun_P_certified(s, chi: DirichletCharacter, P: int, prec: int) -> tuple[mpc, mpf]:
    """log L_P(s, chi) on the branch continuous from s = +infinity, for real s > 1."""
    return _log_lp(_as_key(s), chi, int(P), prec)


@lru_cache(maxsize=262144)
def _log_lp(s, chi: DirichletCharacter, P: int, prec: int) -> tuple[mpc, mpf]:
    sigma = _float(s)
    if sigma <= 1:
        raise DomainError("log L_P(s, chi) requires Re(s) > 1")
    if P >= 3 and log2_log_lp_bound(P, sigma) < -prec - 8:
        return mpc(0), mp.ldexp(1, math.ceil(log2_log_lp_bound(P, sigma)) + 1)
    # Q >= P with |log L_Q| < 1/2, so the principal logarithm of L_Q is the right branch.
    Q = max(P, 4)
    while log2_log_lp_bound(Q, sigma) > -1:
        Q *= 2
    lv = lfun_value(s, chi, prec)
    wp = prec + 16 + int(math.log2(Q))
    with mp.workprec(wp):
        sv = mpf(s.numerator) / s.denominator if isinstance(s, Fraction) else mpf(s)
        prod = lv.value
        between = mpc(0)
        X = _prime_cut(Q, sigma, wp)
        for p in small_primes(X):
            if chi(p) < 0:
                continue
            z = chi.value(p, wp) * mpf(p) ** (-sv)
            prod *= 1 - z
            if p > P:
                between += mp.log(1 - z)
        val = mp.log(prod) - between
        # |log(L + e) - log L| <= |e| / (|L| - |e|)
        err = lv.value_error / (abs(lv.value) - lv.value_error) + mp.ldexp(1, -prec)
        if X < Q:
            err += mp.ldexp(1, math.ceil(log2_log_lp_bound(X, sigma)) + 2)
    return val, err


def log_lfun_P(s, chi: DirichletCharacter, P: int, prec: int) -> mpc:
    return log_lfun_P_certified(s, chi, P, prec)[0]
