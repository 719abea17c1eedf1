"""Constants built from gamma(d, a) and the prime sums, plus an uncertified sieve estimator."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
from mpmath import mp, mpc, mpf

from .arith import ResidueClass, character_group, euler_phi, units
from .errors import CertificationError, DomainError
from .gamma_ap import _gamma1, gamma_da, prime_power_resort
from .lfun import lfun_value
from .numeric import digits_to_prec, euler_gamma_const, gauss_constant, log_gamma
from .primesums import Certified, PrimeSumSpec, log_zeta_da, prime_sum, quad_residue_sum
from .sieve import primes_up_to

APPENDIX_MODULI = (5, 7, 8, 9, 12)


@dataclass(frozen=True)
class ApplicationReport:
    """Named constants sharing one certified error bound (the largest over all of them)."""

    name: str
    values: dict[str, mpf]
    certified_error: mpf
    inputs: tuple[str, ...] = field(default_factory=tuple)


def _prec(digits: int) -> int:
    return digits_to_prec(digits, 64) + 16


def _guarded(digits: int) -> int:
    # components are computed a few digits beyond the target so the combination stays within it
    return digits + 3


# -- sums of two squares

def shanks_constants(digits: int) -> ApplicationReport:
    """gamma_S = gamma - log G - log 2 - sum_{p = 3 (4)} log p / (p^2 - 1) and c_1 = (1 - gamma_S) / 2."""
    if digits < 10:
        raise DomainError("request at least 10 digits")
    q = quad_residue_sum(4, _guarded(digits))
    prec = _prec(digits)
    with mp.workprec(prec):
        gs = euler_gamma_const(prec) - mp.log(gauss_constant(prec)) - mp.log(2) - q.value
        c1 = (1 - gs) / 2
        err = q.error + mp.ldexp(1, -prec + 8)
    return ApplicationReport("shanks", {"gamma_S": gs, "c1": c1}, err,
                             (f"quadratic prime sum mod 4 at {_guarded(digits)} digits",))


def shanks_gamma_via_gamma41(digits: int) -> Certified:
    """gamma_S = -log 2 + gamma(4, 1) - 2 sum_{p = 3 (4)} log p / (p^2 - 1), with gamma(4, 1) from the general engine."""
    g41 = gamma_da(4, 1, _guarded(digits), engine="general")
    q = quad_residue_sum(4, _guarded(digits))
    prec = _prec(digits)
    with mp.workprec(prec):
        return Certified(-mp.log(2) + g41.value - 2 * q.value, g41.certified_error + 2 * q.error)


# -- Euler-Kronecker constant of the cubic subfield of Q(zeta_7)

def euler_kronecker_q7(digits: int) -> ApplicationReport:
    """gamma_K of Q(zeta_7 + zeta_7^-1) = -log 7 / 6 + 3 gamma(7, 1) + 3 gamma(7, 6) + 3 sum_{b=2..5} zeta_{7,b}'/zeta_{7,b}(3)."""
    if digits < 10:
        raise DomainError("request at least 10 digits")
    dg = _guarded(digits)
    g1, g6 = gamma_da(7, 1, dg), gamma_da(7, 6, dg)
    sums = [prime_sum(PrimeSumSpec("c", 3, dg, 7, b)) for b in (2, 3, 4, 5)]
    prec = _prec(digits)
    with mp.workprec(prec):
        val = -mp.log(7) / 6 + 3 * g1.value + 3 * g6.value + 3 * sum(s.value for s in sums)
        err = 3 * (g1.certified_error + g6.certified_error + sum(s.error for s in sums))
        err += mp.ldexp(1, -prec + 8)
    return ApplicationReport("q7", {"gamma_K": val}, err,
                             ("gamma(7,1)", "gamma(7,6)", "zeta_{7,b}'/zeta_{7,b}(3), b = 2..5"))


def euler_kronecker_q7_characters(digits: int) -> Certified:
    """gamma + sum over even non-principal chi mod 7 of L'/L(1, chi)."""
    prec = _prec(digits)
    total = mpc(0)
    err = mpf(0)
    with mp.workprec(prec):
        for chi in character_group(7).nonprincipal():
            if chi.parity == 1:
                lv = lfun_value(1, chi, prec)
                total += lv.logderiv
                err += lv.certified_error
        if abs(total.imag) > mp.ldexp(1, -prec + 16):
            raise CertificationError("the even characters mod 7 should give a real sum")
        return Certified(euler_gamma_const(prec) + total.real, err + mp.ldexp(1, -prec + 8))


# -- lacunarity constants for d = 12

def gamma_quarter(prec: int) -> mpf:
    """Gamma(1/4) from log-gamma, checked against sqrt(G (2 pi)^(3/2))."""
    with mp.workprec(prec + 16):
        g = mp.exp(log_gamma(Fraction(1, 4), prec + 16))
        other = mp.sqrt(gauss_constant(prec + 16) * (2 * mp.pi) ** (mpf(3) / 2))
        if abs(g - other) > mp.ldexp(g, -prec + 4):
            raise CertificationError("Gamma(1/4) disagrees with Gauss's constant")
        return g


def serre_constants(digits: int) -> ApplicationReport:
    """beta_0, gamma_M, beta_1, beta_0' and gamma_N for the two multiplicative sets attached to d = 12."""
    if digits < 10:
        raise DomainError("request at least 10 digits")
    dg = _guarded(digits)
    lz = log_zeta_da(12, 1, 2, dg)
    g121 = gamma_da(12, 1, dg)
    sums = [prime_sum(PrimeSumSpec("c", 2, dg, 12, b)) for b in (5, 7, 11)]
    prec = _prec(digits)
    with mp.workprec(prec):
        pi = mp.pi
        front = (pi**6 * mp.log(2 + mp.sqrt(3)) / (2 * mpf(3) ** 7)) ** (mpf(1) / 4)
        beta0 = front / gamma_quarter(prec) * mp.exp(-lz.value / 2)
        gamma_m = g121.value + 2 * sum(s.value for s in sums)
        beta1 = 3 * beta0 * (1 - gamma_m) / 4
        beta0p = 3 * beta0 / 2
        gamma_n = gamma_m - 2 * mp.log(2) / 3 - mp.log(3) / 4
        # exp(x) - 1 <= 2x for 0 <= x <= 1, so beta0 moves by at most beta0 * error(log zeta)
        # every other constant is a combination with coefficients of size at most 3/2
        e_beta = beta0 * lz.error
        e_gamma = g121.certified_error + 2 * sum(s.error for s in sums)
        err = max(e_beta * 2, e_gamma * 2) + mp.ldexp(1, -prec + 8)
    values = {"beta0": beta0, "gamma_M": gamma_m, "beta1": beta1, "beta0_prime": beta0p, "gamma_N": gamma_n}
    return ApplicationReport("serre", values, err,
                             ("log zeta_{12,1}(2)", "gamma(12,1)", "zeta_{12,b}'/zeta_{12,b}(2), b = 5, 7, 11"))


def serre_product_residual(digits: int) -> mpf:
    """|1/2 sum_{b = 5, 7, 11} log zeta_{12,b}(2) - log(pi/3) + 1/2 log zeta_{12,1}(2)|."""
    logs = {b: log_zeta_da(12, b, 2, digits + 2).value for b in (1, 5, 7, 11)}
    with mp.workprec(_prec(digits)):
        lhs = (logs[5] + logs[7] + logs[11]) / 2
        rhs = mp.log(mp.pi / 3) - logs[1] / 2
        return abs(lhs - rhs)


# -- explicit per-modulus formulas

def resorted_gamma(d: int, a: int, digits: int) -> Certified:
    """gamma(d, a) from gamma_1(d, a) and the prime-power resorting into kind-d prime sums.

    gamma(d, a) = gamma_1 + sum_{b != a, a in <b>} sum_{p = b} p^(nu_b - e_b) log p / (p^nu_b - 1)
                          - sum_{u = 0}^{nu_a - 2} sum_{p = a} p^u log p / (p^nu_a - 1).
    """
    rc = ResidueClass(d, a)
    dg = _guarded(digits)
    prec = _prec(digits)
    g1, err = _gamma1(rc, prec)
    total = g1
    for term in prime_power_resort(rc.d, rc.a):
        if term.b == rc.a:
            for u in range(term.order - 1):
                r = prime_sum(PrimeSumSpec("d", term.order, dg, rc.d, rc.a, u))
                with mp.workprec(prec):
                    total -= r.value
                    err += r.error
        else:
            r = prime_sum(PrimeSumSpec("d", term.order, dg, rc.d, term.b, term.order - term.first))
            with mp.workprec(prec):
                total += r.value
                err += r.error
    return Certified(total, err + mp.ldexp(1, -prec + 8))


def appendix_gamma(d: int, a: int, digits: int) -> Certified:
    """gamma(d, a) for d in {5, 7, 8, 9, 12} via the explicit prime-sum formulas."""
    if d not in APPENDIX_MODULI:
        raise DomainError(f"explicit formulas are tabulated for d in {APPENDIX_MODULI}")
    return resorted_gamma(d, a, digits)


# -- uncertified estimator

def empirical_estimate(d: int, a: int, x: float, segment_size: int | None = None) -> float:
    """log x / phi(d) - sum_{p <= x, p = a (d)} log p / (p - 1).

    This converges to gamma(d, a) but carries no error bound.
    """
    x = int(x)
    if x < 1000:
        raise DomainError("use x >= 1000")
    rc = ResidueClass(d, a)
    kwargs = {} if segment_size is None else {"segment_size": segment_size}
    stream = primes_up_to(x, (rc.d, rc.a % rc.d) if rc.d > 1 else None, **kwargs)
    total = 0.0
    for seg in stream.segments():
        ps = seg.astype(np.float64)
        total += float(np.sum(np.log(ps) / (ps - 1.0)))
    return math.log(x) / euler_phi(rc.d) - total


def empirical_table(d: int, xs: list[float], digits: int = 20) -> list[dict]:
    """Estimates at each x for every class mod d, with the distance to the certified constant."""
    rows = []
    for a in units(d):
        ref = float(gamma_da(d, a, digits, engine="auto").value)
        for x in xs:
            est = empirical_estimate(d, a, x)
            rows.append({"d": d, "a": a, "x": int(x), "estimate": est, "gamma": ref, "distance": abs(est - ref)})
    return rows
