"""Pinned generator recurrence, bounded-draw uniformity, and seeding rules."""

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from intermix import Xorshift64Star

M64 = (1 << 64) - 1


def reference_stream(seed, count):
    """Plain transcription of the published recurrence, kept independent of
    the implementation under test."""
    state = seed if seed != 0 else 0x9E3779B97F4A7C15
    out = []
    for _ in range(count):
        state = (state ^ (state >> 12)) & M64
        state = (state ^ (state << 25)) & M64
        state = (state ^ (state >> 27)) & M64
        out.append((state * 2685821657736338717) & M64)
    return out


# First raw outputs for seed=1, computed by reference_stream and checked by
# hand for the first step: regression anchors, not copied from the code.
GOLDEN_SEED1 = [
    5180492295206395165,
    12380297144915551517,
    13389498078930870103,
    5599127315341312413,
    1036278371763004928,
]


def test_reference_stream_matches_golden_constants():
    assert reference_stream(1, 5) == GOLDEN_SEED1


def test_first_step_for_seed_one_by_explicit_arithmetic():
    # seed 1: x >> 12 is 0, so the first xor keeps 1; 1 ^ (1 << 25) sets one
    # extra bit; that value >> 27 is 0, so the state is 1 + 2**25.
    state = 1 + 2**25
    assert GOLDEN_SEED1[0] == (state * 2685821657736338717) % 2**64


def test_generator_reproduces_reference_stream():
    prng = Xorshift64Star(1)
    assert [prng.next_u64() for _ in range(5)] == GOLDEN_SEED1


@given(st.integers(min_value=0, max_value=M64))
def test_generator_matches_reference_for_any_seed(seed):
    prng = Xorshift64Star(seed)
    assert [prng.next_u64() for _ in range(4)] == reference_stream(seed, 4)


def test_zero_seed_is_remapped_not_stuck():
    prng = Xorshift64Star(0)
    draws = {prng.next_u64() for _ in range(8)}
    assert 0 not in draws
    assert len(draws) == 8


def test_same_seed_same_stream():
    a, b = Xorshift64Star(97), Xorshift64Star(97)
    assert [a.next_u64() for _ in range(50)] == [b.next_u64() for _ in range(50)]


def test_next_index_bound_of_one_always_returns_one():
    prng = Xorshift64Star(3)
    assert all(prng.next_index(1) == 1 for _ in range(20))


def test_next_index_golden_value_for_seed_one():
    # floor-free rejection mapping of GOLDEN_SEED1[0] into [1, 10]:
    # 5180492295206395165 % 10 + 1 (first draw is below the rejection limit).
    assert Xorshift64Star(1).next_index(10) == GOLDEN_SEED1[0] % 10 + 1


def test_next_index_rejects_bad_bound():
    with pytest.raises(ValueError):
        Xorshift64Star(1).next_index(0)


@given(st.integers(min_value=0, max_value=M64), st.integers(min_value=1, max_value=10_000))
def test_next_index_stays_in_range(seed, bound):
    prng = Xorshift64Star(seed)
    assert all(1 <= prng.next_index(bound) <= bound for _ in range(20))


def test_next_index_frequencies_within_five_sigma():
    # 10^5 draws over 10 bins: each count within 5 sigma of 10^4,
    # sigma = sqrt(n p (1-p)).
    n, bins = 100_000, 10
    prng = Xorshift64Star(1)
    counts = [0] * bins
    for _ in range(n):
        counts[prng.next_index(bins) - 1] += 1
    sigma = math.sqrt(n * (1 / bins) * (1 - 1 / bins))
    assert all(abs(c - n / bins) < 5 * sigma for c in counts), counts


def test_next_unit_lies_in_unit_interval():
    prng = Xorshift64Star(11)
    draws = [prng.next_unit() for _ in range(1000)]
    assert all(0.0 <= u < 1.0 for u in draws)
    assert 0.4 < sum(draws) / len(draws) < 0.6


def test_fork_is_keyed_by_seed_xor_salt():
    base = Xorshift64Star(42)
    fork = base.fork(7)
    assert fork.seed == 42 ^ 7
    assert [fork.next_u64() for _ in range(3)] == reference_stream(42 ^ 7, 3)


def test_seed_is_masked_to_64_bits():
    assert Xorshift64Star((1 << 64) + 5).seed == 5
