"""Seeded 64-bit xorshift-star generator used for all shuffle and sampling draws.

The recurrence is pinned so that a given seed produces the same draw stream on
every platform and in every future version:

    state ^= state >> 12
    state ^= (state << 25) mod 2**64
    state ^= state >> 27
    output = (state * 2685821657736338717) mod 2**64

Bounded draws use rejection sampling over the largest multiple of the bound,
so no modulo bias ever enters the swap-position statistics.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1
MULTIPLIER = 2685821657736338717
# Substitute state for seed 0; the recurrence is stuck at zero otherwise.
ZERO_SEED_STATE = 0x9E3779B97F4A7C15


class Xorshift64Star:
    """Deterministic PRNG; one instance per document, never shared across threads."""

    __slots__ = ("seed", "state")

    def __init__(self, seed: int):
        self.seed = seed & MASK64
        self.state = self.seed if self.seed != 0 else ZERO_SEED_STATE

    def next_u64(self) -> int:
        s = self.state
        s ^= s >> 12
        s ^= (s << 25) & MASK64
        s ^= s >> 27
        self.state = s
        return (s * MULTIPLIER) & MASK64

    def next_index(self, n: int) -> int:
        """Uniform draw from [1, n] by rejection over the largest multiple of n."""
        if n < 1:
            raise ValueError(f"bound must be >= 1, got {n}")
        limit = ((1 << 64) // n) * n
        while True:
            u = self.next_u64()
            if u < limit:
                return u % n + 1

    def next_unit(self) -> float:
        """Uniform float in [0, 1) from the top of a 64-bit draw."""
        return self.next_u64() * 2.0**-64

    def fork(self, salt: int) -> "Xorshift64Star":
        """Independent generator for a derived task, keyed by seed XOR salt."""
        return Xorshift64Star((self.seed ^ salt) & MASK64)
