"""Multiprecision constants and helpers shared by every other module.

Values are plain :class:`mpmath.mpf` / :class:`mpmath.mpc` numbers. Every public
function takes an explicit precision in bits and computes with its own guard
bits inside ``mp.workprec``; the global mpmath precision is never relied on.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction

import mpmath
from mpmath import mp, mpf

from .errors import DomainError

GUARD_BITS = 64
LOG2_10 = math.log2(10)

# B_n is available for n <= this bound; raise it with set_bernoulli_limit().
BERNOULLI_LIMIT = 2048

_bern_lock = threading.Lock()
_bern_cache: list[Fraction] = [Fraction(1)]  # B_0, B_2, B_4, ...
_bern_mpf_cache: dict[tuple[int, int], mpf] = {}


def digits_to_prec(digits: int, terms: int = 1) -> int:
    """Working precision (bits) for ``digits`` correct decimals after ``terms`` accumulations."""
    return math.ceil(digits * LOG2_10) + GUARD_BITS + math.ceil(math.log2(max(terms, 1)))


def to_mpf(x) -> mpf:
    """Convert ints, Fractions, decimal/rational strings and mpf at the current precision."""
    if isinstance(x, Fraction):
        return mpf(x.numerator) / x.denominator
    if isinstance(x, str) and "/" in x:
        return to_mpf(Fraction(x))
    return mpf(x)


def set_bernoulli_limit(n: int) -> None:
    global BERNOULLI_LIMIT
    BERNOULLI_LIMIT = int(n)


def _tangent_numbers(n: int) -> list[int]:
    # Brent-Harvey in-place recurrence; t[k] is the tangent number T_{2k-1}.
    t = [0] * (n + 1)
    t[1] = 1
    for k in range(2, n + 1):
        t[k] = (k - 1) * t[k - 1]
    for k in range(2, n + 1):
        for j in range(k, n + 1):
            t[j] = (j - k) * t[j - 1] + (j - k + 2) * t[j]
    return t


def _extend_bernoulli(half: int) -> None:
    with _bern_lock:
        have = len(_bern_cache) - 1
        if have >= half:
            return
        target = max(half, 2 * have, 16)
        t = _tangent_numbers(target)
        out = [Fraction(1)]
        for k in range(1, target + 1):
            sign = 1 if k % 2 else -1
            four = 1 << (2 * k)
            out.append(Fraction(sign * 2 * k * t[k], four * (four - 1)))
        _bern_cache[:] = out


def bernoulli(n: int) -> Fraction:
    """Exact Bernoulli number B_n (with B_1 = -1/2)."""
    if n < 0:
        raise DomainError(f"bernoulli index must be nonnegative, got {n}")
    if n == 1:
        return Fraction(-1, 2)
    if n % 2:
        return Fraction(0)
    if n > BERNOULLI_LIMIT:
        raise DomainError(f"B_{n} exceeds the configured maximum {BERNOULLI_LIMIT}")
    _extend_bernoulli(n // 2)
    return _bern_cache[n // 2]


def bernoulli_mpf(n: int, prec: int) -> mpf:
    key = (n, prec)
    val = _bern_mpf_cache.get(key)
    if val is None:
        b = bernoulli(n)
        with mp.workprec(prec):
            val = mpf(b.numerator) / b.denominator
        _bern_mpf_cache[key] = val
    return val


def agm(a, b, prec: int) -> mpf:
    """Arithmetic-geometric mean M(a, b) of two positive reals."""
    with mp.workprec(prec + 20):
        a, b = to_mpf(a), to_mpf(b)
        if a <= 0 or b <= 0:
            raise DomainError("agm requires positive arguments")
        if a == b:
            return a
        tol = mpmath.ldexp(1, -prec - 8)
        while abs(a - b) >= tol * a:
            a, b = (a + b) / 2, mp.sqrt(a * b)
        return (a + b) / 2


def euler_gamma_const(prec: int) -> mpf:
    """Euler's constant gamma = 0.5772156649..."""
    with mp.workprec(max(prec, 64) + 10):
        return +mp.euler


def gauss_constant(prec: int) -> mpf:
    """Gauss's constant G = 1/M(1, sqrt 2)."""
    with mp.workprec(max(prec, 64) + 10):
        return 1 / agm(1, mp.sqrt(2), prec + 10)


def gamma_one_third(prec: int) -> mpf:
    """Gamma(1/3) from 2^(7/9) pi^(2/3) / (3^(1/12) M(2, sqrt(2+sqrt 3))^(1/3))."""
    wp = max(prec, 64) + 16
    with mp.workprec(wp):
        m = agm(2, mp.sqrt(2 + mp.sqrt(3)), wp)
        return (mpf(2) ** (mpf(7) / 9) * mp.pi ** (mpf(2) / 3)
                / (mpf(3) ** (mpf(1) / 12) * mp.cbrt(m)))


def _stirling_bound_log2(y: float, m: int) -> float:
    # log2 of |B_{2m+2}| / ((2m+2)(2m+1) y^(2m+1)) using |B_2k| <= 4 (2k)! / (2 pi)^(2k)
    k2 = 2 * m + 2
    lg = math.log(4) + math.lgamma(k2 + 1) - k2 * math.log(2 * math.pi)
    lg -= math.log(k2 * (k2 - 1)) + (k2 - 1) * math.log(y)
    return lg / math.log(2)


def log_gamma(x, prec: int) -> mpf:
    """log Gamma(x) for real x > 0 by a shifted Stirling series with bounded remainder."""
    wp = max(prec, 64) + 24
    with mp.workprec(wp):
        x = to_mpf(x)
        if x <= 0:
            raise DomainError("log_gamma is implemented for x > 0 only")
        y0 = max(float(x), 0.9 * wp + 10)
        shift = max(0, math.ceil(y0 - float(x)))
        y = x + shift
        yf = float(y)
        m = 1
        max_m = BERNOULLI_LIMIT // 2 - 1
        while _stirling_bound_log2(yf, m) > -wp - 4:
            m += 1
            if m > max_m:
                raise DomainError("Stirling series would exceed the Bernoulli limit")
        s = (y - mpf(0.5)) * mp.log(y) - y + mp.log(2 * mp.pi) / 2
        ypow = y
        y2 = y * y
        for k in range(1, m + 1):
            s += bernoulli_mpf(2 * k, wp) / ((2 * k) * (2 * k - 1) * ypow)
            ypow *= y2
        if shift:
            prod = mpf(1)
            for i in range(shift):
                prod *= x + i
            s -= mp.log(prod)
        return s


def truncate_decimal(x, decimals: int) -> str:
    """Fixed-point string of x with ``decimals`` digits, truncated toward zero."""
    with mp.workprec(64):
        mag = int(mp.log(abs(x) + 1, 2)) + 2 if x != 0 else 1
    with mp.workprec(math.ceil(decimals * LOG2_10) + mag + 32):
        x = to_mpf(x)
        q = int(mp.floor(abs(x) * mpf(10) ** decimals))
    digits = str(q).rjust(decimals + 1, "0")
    sign = "-" if x < 0 and q else ""
    if decimals == 0:
        return sign + digits
    return f"{sign}{digits[:-decimals]}.{digits[-decimals:]}"


def error_string(err, significant: int = 2) -> str:
    """Scientific notation for a nonnegative error bound, rounded up."""
    with mp.workprec(64):
        err = to_mpf(err)
        if err <= 0:
            return "0"
        e = int(mp.floor(mp.log10(err)))
        mant = int(mp.ceil(err / mpf(10) ** (e - significant + 1)))
        if mant >= 10**significant:
            mant = -(-mant // 10)
            e += 1
    s = str(mant)
    return f"{s[0]}.{s[1:]}e{e}" if len(s) > 1 else f"{s}e{e}"
