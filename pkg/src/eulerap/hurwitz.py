"""Hurwitz zeta, its s-derivative and the Laurent data at s = 1 by Euler-Maclaurin.

All sums split as ``sum_{n<N} f(n+x)`` plus an Euler-Maclaurin tail with ``M``
Bernoulli corrections. The remainder is bounded through |P_2M(t)| <= |B_2M| <=
4 (2M)! / (2 pi)^(2M) and an explicit majorant of the integral of |f^(2M)|:

* power type f(u) = u^-s:   int |f^(2M)| = (s)_(2M-1) U^(1-s-2M)
* log type f(u) = log(u) u^-s:
  int |f^(2M)| <= (s)_(2M) U^(1-a) / (a-1) * (log U + 1/(a-1) + H_2M(s)),
  with a = s + 2M and H_r(s) = sum_{i<r} 1/(s+i).

``N`` and ``M`` are chosen per call to minimise work under the bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from mpmath import mp, mpf

from .errors import DomainError, PoleError
from .numeric import BERNOULLI_LIMIT, bernoulli_mpf, to_mpf

_LN2 = math.log(2)
_LN4 = math.log(4)
_LN2PI = math.log(2 * math.pi)


@dataclass(frozen=True)
class HurwitzParams:
    """Euler-Maclaurin plan: direct terms ``N``, corrections ``M`` and the remainder bound."""

    s: float
    x: float
    prec: int
    N: int
    M: int
    log_type: bool
    remainder_log2: float


class HurwitzValue(NamedTuple):
    zeta: mpf
    dzeta: mpf
    error: mpf


class LaurentData(NamedTuple):
    gamma0: mpf
    gamma1: mpf
    error: mpf


def _poch_log(s: float, r: int) -> float:
    return math.lgamma(s + r) - math.lgamma(s)


def _remainder_log2(s: float, U: float, M: int, log_type: bool) -> float:
    two_m = 2 * M
    base = _LN4 - two_m * _LN2PI
    if not log_type:
        lg = base + _poch_log(s, two_m - 1) + (1 - s - two_m) * math.log(U)
    else:
        a = s + two_m
        harm = 1 / s + math.log((s + two_m - 1) / s)
        lg = (base + _poch_log(s, two_m) + (1 - a) * math.log(U) - math.log(a - 1)
              + math.log(math.log(U) + 1 / (a - 1) + harm))
    return lg / _LN2


@lru_cache(maxsize=4096)
def _plan(s: float, x: float, target_log2: float, log_type: bool, prec: int) -> HurwitzParams:
    max_m = BERNOULLI_LIMIT // 2
    best = None
    n = 1
    while n <= 1 << 24:
        U = n + x
        prev = math.inf
        for m in range(1, max_m + 1):
            lb = _remainder_log2(s, U, m, log_type)
            if lb <= target_log2:
                cost = 3 * n + m
                if best is None or cost < best[0]:
                    best = (cost, n, m, lb)
                break
            if lb > prev:
                break
            prev = lb
        if best is not None and 3 * n > best[0]:
            break
        n = max(n + 1, int(n * 1.2))
    if best is None:
        raise DomainError("no Euler-Maclaurin plan meets the target")
    return HurwitzParams(s, x, prec, best[1], best[2], log_type, best[3])


def _as_key(v):
    if isinstance(v, (int, Fraction)):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    return v


def _check(s, x):
    if float(s) <= 1:
        if s == 1:
            raise PoleError("Hurwitz zeta has a pole at s = 1")
        raise DomainError("Hurwitz zeta is evaluated here only for real s > 1")
    if not 0 < x <= 1:
        raise DomainError("x must lie in (0, 1]")


def hurwitz_plan(s, x, prec: int, derivative: bool = True) -> HurwitzParams:
    s, x = _as_key(s), _as_key(x)
    sf, xf = float(s), float(x)
    target = -(prec + 4) - sf * math.log2(xf)
    return _plan(sf, xf, target, derivative, prec)


def hurwitz_pair(s, x, prec: int) -> HurwitzValue:
    """zeta(s, x) and d/ds zeta(s, x) for real s > 1, 0 < x <= 1.

    The truncation error of each output is below 2^-prec relative to the
    leading term x^-s (so below 2^-prec absolutely as x <= 1).
    """
    return _hurwitz_pair(_as_key(s), _as_key(x), prec)


@lru_cache(maxsize=65536)
def _hurwitz_pair(s, x, prec: int) -> HurwitzValue:
    _check(s, x)
    plan = hurwitz_plan(s, x, prec, derivative=True)
    N, M = plan.N, plan.M
    wp = prec + 24 + N.bit_length()
    with mp.workprec(wp):
        sv, xv = to_mpf(s), to_mpf(x)
        s_int = int(s) if s == int(s) else None
        z = mpf(0)
        dz = mpf(0)
        for n in range(N):
            u = xv + n
            lu = mp.log(u)
            t = u ** (-s_int) if s_int is not None else mp.exp(-sv * lu)
            z += t
            dz -= lu * t
        U = xv + N
        lU = mp.log(U)
        Us = U ** (-s_int) if s_int is not None else mp.exp(-sv * lU)
        s1 = sv - 1
        z += U * Us / s1 + Us / 2
        dz -= U * Us * (lU / s1 + 1 / s1**2) + lU * Us / 2
        # t_k = (s)_(2k-1) U^(-s-2k+1) / (2k)!
        t = sv * Us / U / 2
        harm = 1 / sv
        inv_u2 = 1 / (U * U)
        for k in range(1, M + 1):
            b = bernoulli_mpf(2 * k, wp)
            z += b * t
            dz -= b * t * (lU - harm)
            r = 2 * k
            t = t * (sv + r - 1) * (sv + r) * inv_u2 / ((r + 1) * (r + 2))
            harm += 1 / (sv + r - 1) + 1 / (sv + r)
        err = mp.ldexp(1, -prec) * (xv ** (-sv) if s_int is None else xv ** (-s_int))
    return HurwitzValue(z, dz, err)


def hurwitz_zeta(s, x, prec: int) -> mpf:
    """zeta(s, x) = sum_{n >= 0} (n + x)^-s."""
    return hurwitz_pair(s, x, prec).zeta


def hurwitz_zeta_sderiv(s, x, prec: int) -> mpf:
    """d/ds zeta(s, x) = -sum_{n >= 0} log(n + x) (n + x)^-s."""
    return hurwitz_pair(s, x, prec).dzeta


def stieltjes_pair(x, prec: int) -> LaurentData:
    """Generalized Stieltjes constants gamma_0(x), gamma_1(x) with absolute error < 2^-prec.

    zeta(s, x) = 1/(s-1) + gamma_0(x) - gamma_1(x) (s-1) + O((s-1)^2).
    """
    return _stieltjes_pair(_as_key(x), prec)


@lru_cache(maxsize=4096)
def _stieltjes_pair(x, prec: int) -> LaurentData:
    if not 0 < x <= 1:
        raise DomainError("x must lie in (0, 1]")
    plan = _plan(1.0, float(x), -(prec + 4), True, prec)
    N, M = plan.N, plan.M
    wp = prec + 24 + N.bit_length()
    with mp.workprec(wp):
        xv = to_mpf(x)
        g0 = mpf(0)
        g1 = mpf(0)
        for n in range(N):
            u = xv + n
            inv = 1 / u
            g0 += inv
            g1 += mp.log(u) * inv
        U = xv + N
        lU = mp.log(U)
        g0 += -lU + 1 / (2 * U)
        g1 += -lU * lU / 2 + lU / (2 * U)
        inv_u2 = 1 / (U * U)
        upow = inv_u2
        harm = mpf(1)  # H_(2k-1)
        for k in range(1, M + 1):
            c = bernoulli_mpf(2 * k, wp) * upow / (2 * k)
            g0 += c
            g1 += c * (lU - harm)
            upow *= inv_u2
            harm += mpf(1) / (2 * k) + mpf(1) / (2 * k + 1)
        err = mp.ldexp(1, -prec)
    return LaurentData(g0, g1, err)


def stieltjes0(x, prec: int) -> mpf:
    """gamma_0(x) = -digamma(x)."""
    return stieltjes_pair(x, prec).gamma0


def stieltjes1(x, prec: int) -> mpf:
    return stieltjes_pair(x, prec).gamma1


def riemann_zeta_logderiv(m, prec: int) -> mpf:
    """zeta'(m) / zeta(m) for real m > 1 (integers m >= 2 in practice)."""
    if float(m) <= 1:
        raise DomainError("zeta'/zeta is evaluated here only for m > 1")
    z = hurwitz_pair(m, 1, prec + 4)
    with mp.workprec(prec + 8):
        return z.dzeta / z.zeta
