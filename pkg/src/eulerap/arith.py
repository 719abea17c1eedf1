"""Exact arithmetic on (Z/dZ)*: Moebius and von Mangoldt, orders, Dirichlet characters.

A character is stored as its value table: ``values[n % d]`` is an integer
``e`` with chi(n) = exp(2 pi i e / order), or ``-1`` when gcd(n, d) > 1. Every
identity between characters (orthogonality, powers, lifts) is therefore exact
integer arithmetic; complex numbers appear only in :meth:`DirichletCharacter.value`.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np
from mpmath import mp, mpc, mpf

from .errors import DomainError


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division."""
    if n < 1:
        raise DomainError(f"cannot factor {n}")
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_divisors(n: int) -> list[int]:
    return sorted(factorize(n))


def divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factorize(n).items():
        divs = [q * p**k for q in divs for k in range(e + 1)]
    return sorted(divs)


def euler_phi(n: int) -> int:
    result = n
    for p in factorize(n):
        result = result // p * (p - 1)
    return result


def mobius(n: int) -> int:
    if n < 1:
        raise DomainError("mobius is defined for n >= 1")
    fac = factorize(n)
    if any(e > 1 for e in fac.values()):
        return 0
    return -1 if len(fac) % 2 else 1


def mobius_sieve(limit: int) -> np.ndarray:
    """mu(n) for 0 <= n <= limit (index 0 is unused and set to 0)."""
    mu = np.ones(limit + 1, dtype=np.int8)
    mu[0] = 0
    is_comp = np.zeros(limit + 1, dtype=bool)
    for p in range(2, limit + 1):
        if is_comp[p]:
            continue
        is_comp[2 * p::p] = True
        mu[p::p] *= -1
        mu[p * p::p * p] = 0
    return mu


def von_mangoldt(n: int) -> tuple[bool, int | None, int]:
    """Return ``(True, p, k)`` when n = p^k with k >= 1, else ``(False, None, 0)``.

    Lambda(n) is log p in the first case and 0 otherwise.
    """
    if n < 2:
        return (False, None, 0)
    fac = factorize(n)
    if len(fac) != 1:
        return (False, None, 0)
    (p, k), = fac.items()
    return (True, p, k)


def squarefree_upto(n: int) -> list[int]:
    return [j for j in range(1, n + 1) if mobius(j) != 0]


def multiplicative_order(b: int, d: int) -> int:
    """Least k >= 1 with b^k = 1 (mod d)."""
    if d < 1 or math.gcd(b, d) != 1:
        raise DomainError(f"{b} is not a unit modulo {d}")
    if d == 1:
        return 1
    b %= d
    lam = carmichael(d)
    k = lam
    for p in factorize(lam):
        while k % p == 0 and pow(b, k // p, d) == 1:
            k //= p
    return k


def carmichael(d: int) -> int:
    lam = 1
    for p, e in factorize(d).items():
        if p == 2:
            part = 1 if e == 1 else 2 if e == 2 else 2 ** (e - 2)
        else:
            part = (p - 1) * p ** (e - 1)
        lam = lam * part // math.gcd(lam, part)
    return lam


def first_exponent(b: int, a: int, d: int) -> int | None:
    """Smallest k >= 2 with b^k = a (mod d), or None when a is not in <b>."""
    if math.gcd(b, d) != 1 or math.gcd(a, d) != 1:
        raise DomainError("b and a must be units modulo d")
    nu = multiplicative_order(b, d)
    target = a % d
    for k in range(2, nu + 2):
        if pow(b, k, d) == target % d:
            return k
    return None


def primitive_root(q: int) -> int:
    """Generator of (Z/qZ)* for q = p^e with p an odd prime (or q in {2, 4})."""
    if q in (2, 4):
        return q - 1
    (p, e), = factorize(q).items()
    if p == 2:
        raise DomainError(f"(Z/{q}Z)* is not cyclic")
    phi_p = p - 1
    fac = prime_divisors(phi_p)
    for g in range(2, p):
        if all(pow(g, phi_p // r, p) != 1 for r in fac):
            break
    if e > 1 and pow(g, p - 1, p * p) == 1:
        g += p
    return g


@dataclass(frozen=True)
class ResidueClass:
    """A primitive residue class a mod d, with 1 <= a <= d."""

    d: int
    a: int

    def __post_init__(self):
        if self.d < 1:
            raise DomainError(f"modulus must be positive, got {self.d}")
        if math.gcd(self.a, self.d) != 1:
            raise DomainError(f"gcd({self.a}, {self.d}) != 1")
        object.__setattr__(self, "a", (self.a - 1) % self.d + 1)


def units(d: int) -> list[int]:
    """Representatives 1 <= a <= d of the primitive classes mod d."""
    return [a for a in range(1, d + 1) if math.gcd(a, d) == 1]


_ROOT_CACHE: dict[tuple[int, int, int], mpc] = {}


def root_of_unity(e: int, order: int, prec: int) -> mpc:
    """exp(2 pi i e / order), exact for orders 1, 2 and 4."""
    e %= order
    key = (e, order, prec)
    val = _ROOT_CACHE.get(key)
    if val is None:
        with mp.workprec(prec):
            if 4 % order == 0:
                q = 4 * e // order
                val = [mpc(1), mpc(0, 1), mpc(-1), mpc(0, -1)][q]
            else:
                t = mpf(2 * e) / order
                val = mpc(mp.cospi(t), mp.sinpi(t))
        _ROOT_CACHE[key] = val
    return val


@dataclass(frozen=True, eq=True)
class DirichletCharacter:
    """A Dirichlet character modulo ``modulus`` as an exact exponent table."""

    modulus: int
    order: int
    values: tuple[int, ...]

    def __call__(self, n: int) -> int:
        """Exponent e with chi(n) = exp(2 pi i e / order); -1 when chi(n) = 0."""
        return self.values[n % self.modulus]

    def value(self, n: int, prec: int) -> mpc:
        e = self.values[n % self.modulus]
        if e < 0:
            return mpc(0)
        return root_of_unity(e, self.order, prec)

    @property
    def is_principal(self) -> bool:
        return self.order == 1

    @property
    def parity(self) -> int:
        """chi(-1), which is +1 or -1."""
        return 1 if self(-1) == 0 else -1

    def power(self, j: int) -> "DirichletCharacter":
        return _make_character(self.modulus, [
            -1 if v < 0 else v * j % self.order for v in self.values], self.order)

    def conj(self) -> "DirichletCharacter":
        return self.power(-1)

    @cached_property
    def conductor(self) -> int:
        d = self.modulus
        for f in divisors(d):
            if all(self.values[n] == 0 for n in range(1, d, f)
                   if self.values[n] >= 0):
                return f
        return d

    @property
    def is_primitive(self) -> bool:
        return self.conductor == self.modulus

    def primitive_lift(self) -> tuple["DirichletCharacter", int]:
        return primitive_lift(self)


def _make_character(modulus: int, values: list[int], order: int) -> DirichletCharacter:
    g = order
    for v in values:
        if v > 0:
            g = math.gcd(g, v)
    if g > 1:
        values = [v // g if v >= 0 else -1 for v in values]
        order //= g
    return DirichletCharacter(modulus, order, tuple(values))


class CharacterGroup:
    """All phi(d) Dirichlet characters mod d, built from the CRT decomposition of (Z/dZ)*.

    Odd prime powers contribute a cyclic factor generated by a primitive root;
    2^k contributes <-1> (k >= 2) and <5> (k >= 3). ``characters[0]`` is principal.
    """

    def __init__(self, d: int):
        if d < 1:
            raise DomainError(f"modulus must be positive, got {d}")
        self.modulus = d
        comps: list[tuple[int, int, dict[int, int]]] = []  # (q, order, dlog table mod q)
        for p, e in sorted(factorize(d).items()) if d > 1 else []:
            q = p**e
            if p == 2:
                if e >= 2:
                    comps.append((q, 2, {x: (0 if x % 4 == 1 else 1) for x in range(1, q, 2)}))
                if e >= 3:
                    order = 2 ** (e - 2)
                    table = {}
                    for sgn in (1, -1):
                        x = 1
                        for k in range(order):
                            table[(sgn * x) % q] = k
                            x = x * 5 % q
                    comps.append((q, order, table))
            else:
                g = primitive_root(q)
                order = (p - 1) * p ** (e - 1)
                table, x = {}, 1
                for k in range(order):
                    table[x] = k
                    x = x * g % q
                comps.append((q, order, table))
        self.orders = tuple(c[1] for c in comps)
        self.exponent = math.lcm(*self.orders) if self.orders else 1
        self.units = units(d)
        # dlog[n] = tuple of component logarithms, or None for non-units
        self.dlog: list[tuple[int, ...] | None] = [None] * d
        for n in self.units:
            self.dlog[n % d] = tuple(tab[n % q] for q, _, tab in comps)
        basis = [tuple(int(i == j) for j in range(len(comps))) for i in range(len(comps))]
        self.generators = tuple(
            next(n for n in self.units if self.dlog[n % d] == vec) for vec in basis)
        self.characters: list[DirichletCharacter] = []
        self._index: dict[DirichletCharacter, int] = {}
        big = self.exponent
        scale = [big // o for o in self.orders]
        for vec in itertools.product(*(range(o) for o in self.orders)):
            vals = [-1] * d
            for n in self.units:
                logs = self.dlog[n % d]
                vals[n % d] = sum(c * l * s for c, l, s in zip(vec, logs, scale)) % big
            chi = _make_character(d, vals, big)
            self._index[chi] = len(self.characters)
            self.characters.append(chi)

    def __len__(self) -> int:
        return len(self.characters)

    def __iter__(self):
        return iter(self.characters)

    def __getitem__(self, i: int) -> DirichletCharacter:
        return self.characters[i]

    def index(self, chi: DirichletCharacter) -> int:
        return self._index[chi]

    @property
    def principal(self) -> DirichletCharacter:
        return self.characters[0]

    def nonprincipal(self) -> list[DirichletCharacter]:
        return self.characters[1:]

    def orthogonality_sum(self, a: int, n: int) -> int:
        """phi(d)^-1 sum_chi conj(chi)(a) chi(n), evaluated exactly in Z[zeta_E]."""
        d = self.modulus
        if math.gcd(a, d) != 1:
            raise DomainError("a must be a unit")
        if math.gcd(n, d) != 1:
            return 0
        big = self.exponent
        counts = [0] * big
        for chi in self.characters:
            counts[(chi(n) - chi(a)) * (big // chi.order) % big] += 1
        reduced = cyclotomic_reduce(counts)
        if any(reduced[1:]):
            raise ArithmeticError("character sum is not rational")
        total, rem = divmod(reduced[0] if reduced else 0, len(self.characters))
        if rem:
            raise ArithmeticError("character sum is not a multiple of phi(d)")
        return total


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients (constant term first) of the n-th cyclotomic polynomial."""
    num = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for m in divisors(n)[:-1]:
        num = _poly_divexact(num, list(cyclotomic_polynomial(m)))
    return tuple(num)


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    num = num[:]
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1] // den[-1]
        out[i] = c
        for j, dj in enumerate(den):
            num[i + j] -= c * dj
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return out


def cyclotomic_reduce(coeffs: list[int]) -> list[int]:
    """Reduce sum_k coeffs[k] zeta_E^k (E = len(coeffs)) to its canonical form mod Phi_E."""
    big = len(coeffs)
    phi = cyclotomic_polynomial(big)
    deg = len(phi) - 1
    rem = list(coeffs)
    for i in range(len(rem) - 1, deg - 1, -1):
        c = rem[i]
        if c:
            for j, pj in enumerate(phi):
                rem[i - deg + j] -= c * pj
    return rem[:deg]


@lru_cache(maxsize=None)
def character_group(d: int) -> CharacterGroup:
    return CharacterGroup(d)


def char_power_order(chi: DirichletCharacter, j: int) -> int:
    """Order of chi^j, i.e. nu(chi) / gcd(j, nu(chi))."""
    if j < 1:
        raise DomainError("j must be positive")
    return chi.order // math.gcd(j, chi.order)


def primitive_lift(chi: DirichletCharacter) -> tuple[DirichletCharacter, int]:
    """The primitive character chi* mod f inducing chi, and its conductor f."""
    d, f = chi.modulus, chi.conductor
    if f == d:
        return chi, d
    vals = [-1] * f
    for m in range(f):
        if math.gcd(m, f) != 1:
            continue
        n = m
        while math.gcd(n, d) != 1:
            n += f
        vals[m] = chi.values[n % d]
    lifted = _make_character(f, vals, chi.order)
    group = character_group(f)
    return group[group.index(lifted)], f
