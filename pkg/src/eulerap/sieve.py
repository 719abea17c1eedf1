"""Segmented odd-only sieve of Eratosthenes with optional residue-class filtering."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .errors import DomainError

DEFAULT_SEGMENT = 1 << 22


def simple_sieve(limit: int) -> np.ndarray:
    """All primes <= limit from a plain (non-segmented) sieve."""
    if limit < 2:
        return np.array([], dtype=np.int64)
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p * p::p] = False
    return np.flatnonzero(is_prime).astype(np.int64)


@dataclass(frozen=True)
class PrimeStream:
    """Primes p <= limit in increasing order, optionally restricted to p = a (mod d).

    ``segment_size`` counts odd candidates per segment.
    """

    limit: int
    residue_filter: tuple[int, int] | None = None
    segment_size: int = DEFAULT_SEGMENT

    def __post_init__(self):
        if self.residue_filter is not None:
            d, a = self.residue_filter
            if d < 1:
                raise DomainError("modulus must be positive")
            object.__setattr__(self, "residue_filter", (d, a % d))
        if self.segment_size < 1:
            raise DomainError("segment_size must be positive")

    def segments(self) -> Iterator[np.ndarray]:
        """Yield int64 arrays of consecutive primes, one per sieve segment."""
        limit = self.limit
        if limit < 2:
            return
        filt = self.residue_filter
        if limit >= 2 and (filt is None or 2 % filt[0] == filt[1]):
            yield np.array([2], dtype=np.int64)
        base = simple_sieve(math.isqrt(limit))[1:]
        span = 2 * self.segment_size
        low = 3
        while low <= limit:
            high = min(low + span, limit + 1)  # exclusive, low odd
            count = (high - low + 1) // 2
            mask = np.ones(count, dtype=bool)
            for p in base:
                p = int(p)
                p2 = p * p
                if p2 >= high:
                    break
                start = max(p2, (low + p - 1) // p * p)
                if start % 2 == 0:
                    start += p
                if start < high:
                    mask[(start - low) // 2::p] = False
            primes = low + 2 * np.flatnonzero(mask).astype(np.int64)
            if filt is not None:
                primes = primes[primes % filt[0] == filt[1]]
            if primes.size:
                yield primes
            low += span

    def __iter__(self) -> Iterator[int]:
        for seg in self.segments():
            yield from seg.tolist()

    def to_array(self) -> np.ndarray:
        parts = list(self.segments())
        return np.concatenate(parts) if parts else np.array([], dtype=np.int64)

    def count(self) -> int:
        return sum(int(seg.size) for seg in self.segments())


def primes_up_to(limit: int, residue_filter: tuple[int, int] | None = None,
                 segment_size: int = DEFAULT_SEGMENT) -> PrimeStream:
    return PrimeStream(int(limit), residue_filter, segment_size)


def prime_count_ap(limit: int, d: int, a: int) -> int:
    """pi(limit; d, a), the number of primes p <= limit with p = a (mod d)."""
    if math.gcd(a, d) != 1:
        raise DomainError(f"gcd({a}, {d}) != 1")
    return primes_up_to(limit, (d, a)).count()


_SMALL_PRIMES: np.ndarray = simple_sieve(1 << 16)


def small_primes(limit: int) -> list[int]:
    """Primes <= limit as Python ints (served from a precomputed table when possible)."""
    global _SMALL_PRIMES
    if limit > int(_SMALL_PRIMES[-1]):
        _SMALL_PRIMES = simple_sieve(max(limit, 2 * int(_SMALL_PRIMES[-1])))
    return _SMALL_PRIMES[:np.searchsorted(_SMALL_PRIMES, limit, side="right")].tolist()
