"""Atomic word swaps and the cumulative intermixing schedule.

One shuffled trajectory is a single walk along one PRNG stream: state k is
state k-1 plus however many extra swaps the schedule calls for, so the whole
list of states embodies a monotone increase in disorder, not 21 independent
shuffles.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import IndexOutOfRangeError, TooFewWordsError
from .rng import Xorshift64Star
from .text import WordSequence

DEFAULT_MAX_K = 20
DEFAULT_SWAP_DIVISOR = 10


@dataclass(frozen=True)
class IntermixSchedule:
    """Swap budget per intermixing coefficient k = 0..max_k.

    State k carries floor(k * N / divisor) cumulative swaps; with the default
    divisor of 10 the final state has seen 2N swaps.
    """

    max_k: int = DEFAULT_MAX_K
    divisor: int = DEFAULT_SWAP_DIVISOR

    def __post_init__(self):
        if self.max_k < 0:
            raise ValueError(f"max_k must be >= 0, got {self.max_k}")
        if self.divisor < 1:
            raise ValueError(f"divisor must be >= 1, got {self.divisor}")

    def swap_counts(self, n_words: int) -> list[int]:
        """Cumulative swap totals for k = 0..max_k; entry k is floor(k*N/divisor)."""
        if n_words < 0:
            raise ValueError("word count cannot be negative")
        return [(k * n_words) // self.divisor for k in range(self.max_k + 1)]


def atomic_swap(seq: WordSequence, n: int, m: int) -> WordSequence:
    """Exchange the words at 1-based positions n and m; n == m is a no-op."""
    size = seq.n_words
    if not (1 <= n <= size) or not (1 <= m <= size):
        raise IndexOutOfRangeError(f"swap positions ({n}, {m}) outside [1, {size}]")
    if n == m:
        return seq
    words = list(seq.words)
    words[n - 1], words[m - 1] = words[m - 1], words[n - 1]
    return WordSequence(words=tuple(words))


def iter_intermix_states(
    seq: WordSequence, schedule: IntermixSchedule, prng: Xorshift64Star
) -> Iterator[tuple[int, WordSequence]]:
    """Yield (k, state k) lazily; see intermix_states for the contract."""
    counts = schedule.swap_counts(seq.n_words)
    if seq.n_words < 2 and counts[-1] > 0:
        raise TooFewWordsError(
            f"need at least 2 words to intermix, got {seq.n_words}"
        )
    return _walk_states(seq, counts, prng)


def _walk_states(
    seq: WordSequence, counts: list[int], prng: Xorshift64Star
) -> Iterator[tuple[int, WordSequence]]:
    working = list(seq.words)
    size = len(working)
    yield 0, seq
    done = 0
    for k in range(1, len(counts)):
        for _ in range(counts[k] - done):
            n = prng.next_index(size)
            m = prng.next_index(size)
            working[n - 1], working[m - 1] = working[m - 1], working[n - 1]
        done = counts[k]
        yield k, WordSequence(words=tuple(working))


def intermix_states(
    seq: WordSequence, schedule: IntermixSchedule, prng: Xorshift64Star
) -> list[WordSequence]:
    """All max_k + 1 shuffle states of a word sequence.

    State 0 is the input; each later state extends the previous one with
    (swap_counts[k] - swap_counts[k-1]) further swaps, every swap drawing its
    two positions n then m from the one PRNG stream. Identical (words, schedule,
    seed) triples therefore reproduce identical state lists anywhere.
    """
    return [state for _, state in iter_intermix_states(seq, schedule, prng)]
