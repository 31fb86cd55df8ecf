"""Seeded xorshift64* generator.

Search runs must replay bit-exactly across platforms and Python
versions, so randomness comes from this fixed 64-bit generator rather
than the stdlib Mersenne twister.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1
_MULT = 2685821657736338717


class XorShift64Star:
    """Classic xorshift64* with a nonzero 64-bit state."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = (seed & _MASK64) or 0x9E3779B97F4A7C15

    def next_u64(self) -> int:
        x = self.state
        x ^= x >> 12
        x = (x ^ (x << 25)) & _MASK64
        x ^= x >> 27
        self.state = x
        return (x * _MULT) & _MASK64

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound) via the multiply-shift trick."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        return (self.next_u64() * bound) >> 64

    def chance(self, p: float) -> bool:
        """Bernoulli(p) from the top 53 bits."""
        return (self.next_u64() >> 11) < p * (1 << 53)

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]

    def sample_indices(self, n: int, k: int) -> list[int]:
        """k distinct indices from range(n), by partial Fisher-Yates."""
        if k > n:
            raise ValueError("cannot sample more items than available")
        pool = list(range(n))
        for i in range(k):
            j = i + self.below(n - i)
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:k]
