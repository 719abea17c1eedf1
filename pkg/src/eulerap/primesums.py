"""Certified prime sums over an arithmetic progression.

Every sum handled here has the shape

    sum_{p = a (d)} sum_{k >= 1} c_k F(p) p^-(k sigma + beta),    F(p) in {log p, 1},

which is split at a prime cutoff P. Primes p <= P are summed in closed form.
For p > P the inner sum over primes is rewritten with character orthogonality
and Moebius inversion as L_P'/L_P (for F = log p) or log L_P (for F = 1) at the
arguments (k sigma + beta) j; both the k-series and the j-series are cut with
explicit tail bounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, NamedTuple

from mpmath import mp, mpc, mpf

from .arith import character_group, mobius, euler_phi
from .errors import BudgetError, CertificationError, DomainError
from .hurwitz import riemann_zeta_logderiv
from .lfun import (
    lfun_P_logderiv_certified,
    lfun_value,
    log2_lp_logderiv_bound,
    log2_log_lp_bound,
    log_lfun_P_certified,
)
from .numeric import digits_to_prec
from .sieve import small_primes

DEFAULT_CUTOFF = 1024
KINDS = ("a", "b", "c", "d")


class Certified(NamedTuple):
    """A real value with a rigorous absolute error bound."""

    value: mpf
    error: mpf


@dataclass(frozen=True)
class PrimeSumSpec:
    """One of the four prime sums.

    * ``a``: sum_p log p / (p^s (p - 1))
    * ``b``: the same over p = a (mod d)
    * ``c``: zeta_{d,a}'/zeta_{d,a}(s) = -sum_{p = a (d)} log p / (p^s - 1)
    * ``d``: sum_{p = a (d)} p^u log p / (p^s - 1)
    """

    kind: str
    s: Fraction
    digits: int
    d: int = 1
    a: int = 1
    u: Fraction = Fraction(0)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise DomainError(f"unknown prime-sum kind {self.kind!r}")
        object.__setattr__(self, "s", Fraction(self.s))
        object.__setattr__(self, "u", Fraction(self.u))
        if self.kind == "a" and self.d != 1:
            raise DomainError("kind a runs over all primes; use kind b for a residue class")
        if self.d < 1 or math.gcd(self.a, self.d) != 1:
            raise DomainError(f"({self.d}, {self.a}) is not a primitive residue class")
        if self.digits < 1:
            raise DomainError("digits must be positive")
        if self.kind in ("a", "b") and self.s < Fraction(1, 2):
            raise DomainError("kinds a and b are supported for s >= 1/2")
        if self.kind == "c" and self.s <= 1:
            raise DomainError("kind c needs s > 1")
        if self.kind == "d" and self.s <= self.u + 1:
            raise DomainError("kind d needs s > u + 1")


def _real(z, tol: mpf, what: str) -> mpf:
    if isinstance(z, mpc):
        if abs(z.imag) >= tol:
            raise CertificationError(f"{what}: imaginary part {mp.nstr(z.imag, 5)} is not negligible")
        return z.real
    return z


def real_tolerance(digits: int) -> mpf:
    """Largest imaginary part tolerated in a character sum that must be real."""
    return mpf(10) ** (-digits - 5)


def _log2_tail(P: int, alpha: float, log_weight: bool) -> float:
    return log2_lp_logderiv_bound(P, alpha) if log_weight else log2_log_lp_bound(P, alpha)


def _accelerated(d: int, a: int, alphas: Callable[[int], Fraction], coeff: Callable[[int], Fraction],
                 step: float, log_weight: bool, digits: int, P: int, prec: int) -> tuple[mpc, mpf]:
    """(1/phi) sum_chi conj chi(a) sum_k c_k sum_{p > P} chi(p) F(p) p^-alpha_k, with its bound.

    ``step`` is the growth of alpha_k per unit of k (sigma above).
    """
    target = -digits * math.log2(10) - 2  # each tail gets 10^-digits / 4
    # k-tail: |c_k| <= 1 and the p-sum is bounded by the P-tail bound, geometric in P^-step
    K = 1
    while _log2_tail(P, float(alphas(K + 1)), log_weight) - math.log2(1 - P ** -step) > target:
        K += 1
        if K > 100000:
            raise BudgetError("k-series does not converge fast enough")
    group = character_group(d)
    phi = len(group)
    total = mpc(0)
    # the loops compare float log2 values, so each share is inflated by 2^-40 for their rounding
    share = mpf(10) ** -digits / 4 * (1 + mp.ldexp(1, -40))
    err = +share
    for k in range(1, K + 1):
        alpha = alphas(k)
        af = float(alpha)
        ck = coeff(k)
        if ck == 0:
            continue
        # j-tail for this k, its share of the budget is 10^-digits / (4K)
        jt = target - math.log2(K)
        J = 1
        while _log2_tail(P, af * (J + 1), log_weight) - math.log2(1 - P ** -af) > jt:
            J += 1
        err += share / K * abs(mpf(ck.numerator) / ck.denominator)
        for j in range(1, J + 1):
            mu = mobius(j)
            if mu == 0:
                continue
            for chi in group:
                ca = chi(a)
                if ca < 0:
                    continue
                psi = chi.power(j)
                if log_weight:
                    v, e = lfun_P_logderiv_certified(alpha * j, psi, P, prec)
                    w = ck * -mu / phi
                else:
                    v, e = log_lfun_P_certified(alpha * j, psi, P, prec)
                    w = ck * Fraction(mu, j) / phi
                with mp.workprec(prec + 16):
                    c = _rational(w)
                    total += c * chi.conj().value(a, prec + 16) * v
                    err += abs(c) * e
    return total, err


def _direct(d: int, a: int, P: int, term: Callable[[int], mpf], prec: int) -> mpf:
    total = mpf(0)
    with mp.workprec(prec + 16):
        for p in small_primes(P):
            if d == 1 or p % d == a % d:
                total += term(p)
    return total


def _series(spec: PrimeSumSpec):
    """(sign, alpha_k, c_k, step, per-prime closed form) for a spec."""
    s, u = spec.s, spec.u
    if spec.kind in ("a", "b"):
        return 1, (lambda k: k + s), (lambda k: Fraction(1)), 1.0, \
            (lambda p, sv, uv: mp.log(p) / (mpf(p) ** sv * (p - 1)))
    if spec.kind == "c":
        return -1, (lambda k: k * s), (lambda k: Fraction(1)), float(s), \
            (lambda p, sv, uv: mp.log(p) / (mpf(p) ** sv - 1))
    return 1, (lambda k: k * s - u), (lambda k: Fraction(1)), float(s), \
        (lambda p, sv, uv: mpf(p) ** uv * mp.log(p) / (mpf(p) ** sv - 1))


def _rational(x: Fraction) -> mpf:
    return mpf(x.numerator) / x.denominator


def prime_sum(spec: PrimeSumSpec, P: int = DEFAULT_CUTOFF) -> Certified:
    """Evaluate a :class:`PrimeSumSpec` with certified error below 10^-digits."""
    if P < 3:
        raise DomainError("the prime cutoff must be at least 3")
    sign, alphas, coeff, step, closed = _series(spec)
    d, a = spec.d, spec.a % spec.d
    prec = digits_to_prec(spec.digits, 4 * euler_phi(d) * (P + 64))
    with mp.workprec(prec + 16):
        sv, uv = _rational(spec.s), _rational(spec.u)
        head = _direct(d, a, P, lambda p: closed(p, sv, uv), prec)
    tail, err = _accelerated(d, a, alphas, coeff, step, True, spec.digits, P, prec)
    with mp.workprec(prec + 16):
        val = head + _real(tail, real_tolerance(spec.digits), "prime sum")
        err = err + mp.ldexp(1, -prec + 4)
        return Certified(sign * val, err)


def log_zeta_da(d: int, a: int, s, digits: int, P: int = DEFAULT_CUTOFF) -> Certified:
    """log zeta_{d,a}(s) = -sum_{p = a (d)} log(1 - p^-s) for real s > 1."""
    return _log_series(d, a, s, digits, P, alternating=False)


def alternating_log_sum(d: int, a: int, s, digits: int, P: int = DEFAULT_CUTOFF) -> Certified:
    """sum_{p = a (d)} log(1 + p^-s) for real s > 1."""
    return _log_series(d, a, s, digits, P, alternating=True)


def _log_series(d, a, s, digits, P, alternating):
    s = Fraction(s)
    if s <= 1:
        raise DomainError("the Euler product converges only for s > 1")
    if d < 1 or math.gcd(a, d) != 1:
        raise DomainError(f"({d}, {a}) is not a primitive residue class")
    if P < 3:
        raise DomainError("the prime cutoff must be at least 3")
    a %= d
    prec = digits_to_prec(digits, 4 * euler_phi(d) * (P + 64))
    if alternating:
        coeff = lambda k: Fraction(1 if k % 2 else -1, k)  # noqa: E731
        closed = lambda p, sv: mp.log(1 + mpf(p) ** -sv)  # noqa: E731
    else:
        coeff = lambda k: Fraction(1, k)  # noqa: E731
        closed = lambda p, sv: -mp.log(1 - mpf(p) ** -sv)  # noqa: E731
    with mp.workprec(prec + 16):
        sv = _rational(s)
        head = _direct(d, a, P, lambda p: closed(p, sv), prec)
    tail, err = _accelerated(d, a, lambda k: k * s, coeff, float(s), False, digits, P, prec)
    with mp.workprec(prec + 16):
        val = head + _real(tail, real_tolerance(digits), "log zeta")
        return Certified(val, err + mp.ldexp(1, -prec + 4))


# -- quadratic characters mod 3 and 4 by recursive doubling

_RAMIFIED = {3: 3, 4: 2}


def doubling_depth(d: int, digits: int) -> int:
    """Smallest J for which the tail sum_{p = -1 (d)} log p / (p^(2^(J+1)) - 1) is below 10^-digits / 2."""
    if d not in _RAMIFIED:
        raise DomainError("recursive doubling is implemented for d = 3 and d = 4")
    target = -digits * math.log2(10) - 1
    J = 1
    while _quad_tail_log2(2 ** (J + 1)) > target:
        J += 1
    return J


def _quad_tail_log2(sigma: int) -> float:
    # log2 of a bound for sum_{n >= 2} log n / (n^sigma - 1): terms n = 2, 3 plus the n > 3 tail
    two = math.log2(math.log(2)) - sigma - math.log2(1 - 2.0 ** -sigma)
    three = math.log2(math.log(3)) - sigma * math.log2(3) - math.log2(1 - 3.0 ** -sigma)
    rest = log2_lp_logderiv_bound(3, sigma)
    return max(two, three, rest) + math.log2(3)


def quad_residue_sum(d: int, digits: int) -> Certified:
    """sum_{p = -1 (d)} log p / (p^2 - 1) for d in {3, 4}.

    With g(s) = sum_{p = -1 (d)} log p p^s / (p^(2s) - 1) and
    f(s) = sum_{p = -1 (d)} log p / (p^s - 1) one has g(s) = f(s) - f(2s), so
    f(2) = g(2) + g(4) + ... + g(2^J) + f(2^(J+1)), and each g(2^j) is half of
    L'/L(2^j, chi) - zeta'/zeta(2^j) - log q / (q^(2^j) - 1) with chi the
    quadratic character mod d and q its ramified prime.
    """
    J = doubling_depth(d, digits)
    q = _RAMIFIED[d]
    chi = character_group(d)[1]
    prec = digits_to_prec(digits, 4 * J)
    total = mpf(0)
    err = mpf(0)
    with mp.workprec(prec + 16):
        for j in range(1, J + 1):
            m = 2**j
            lv = lfun_value(m, chi, prec + 8)
            zl = riemann_zeta_logderiv(m, prec + 8)
            g = (_real(lv.logderiv, mp.ldexp(1, -prec), "quadratic L'/L")
                 - zl - mp.log(q) / (mpf(q) ** m - 1))
            total += g / 2
            err += lv.certified_error + mp.ldexp(1, -prec)
        err += mp.ldexp(1, math.ceil(_quad_tail_log2(2 ** (J + 1))))
    return Certified(total, err)
