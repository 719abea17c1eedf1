import time

import numpy as np
import pytest
from hypothesis import given, strategies as st

from eulerap.errors import DomainError
from eulerap.sieve import prime_count_ap, primes_up_to, simple_sieve, small_primes


def test_exhaustive_agreement_with_plain_sieve():
    ref = simple_sieve(10**6)
    assert np.array_equal(primes_up_to(10**6).to_array(), ref)
    assert np.array_equal(primes_up_to(10**6, segment_size=1000).to_array(), ref)


@given(st.integers(min_value=0, max_value=20000), st.integers(min_value=1, max_value=5000))
def test_segment_size_does_not_matter(limit, seg):
    ref = simple_sieve(limit)
    assert np.array_equal(primes_up_to(limit, segment_size=seg).to_array(), ref)


@given(st.integers(min_value=2, max_value=5000), st.integers(min_value=1, max_value=60), st.data())
def test_residue_filter(limit, d, data):
    a = data.draw(st.integers(min_value=0, max_value=d - 1))
    ref = [p for p in simple_sieve(limit).tolist() if p % d == a]
    assert list(primes_up_to(limit, (d, a), segment_size=97)) == ref


def test_small_counts():
    assert primes_up_to(100).count() == 25
    assert prime_count_ap(100, 4, 1) == 11
    # 3 7 11 19 23 31 43 47 59 67 71 79 83
    assert prime_count_ap(100, 4, 3) == 13
    assert prime_count_ap(10**6, 4, 3) == 39322
    assert small_primes(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert small_primes(200000)[-1] == 199999


def test_bad_arguments():
    with pytest.raises(DomainError):
        prime_count_ap(100, 4, 2)
    with pytest.raises(DomainError):
        primes_up_to(100, segment_size=0)


def test_throughput_order_of_magnitude():
    t0 = time.perf_counter()
    n = primes_up_to(10**7).count()
    assert n == 664579
    assert time.perf_counter() - t0 < 5.0
