"""SplitMix64 generator and the sampling helpers built on it.

Every stochastic step in the package (random attacks, source sampling,
graph generators) draws from this generator so that results are
bit-reproducible across platforms and implementations.
"""
from __future__ import annotations

from typing import Sequence, TypeVar

T = TypeVar("T")

MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


class SplitMix64:
    """Vigna's SplitMix64. State is a single 64-bit word."""

    __slots__ = ("state",)

    def __init__(self, seed: int = 0):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + _GOLDEN) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def uniform(self) -> float:
        """Uniform double in [0, 1) from the top 53 bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def below(self, bound: int) -> int:
        # plain modulo; the bias is < bound / 2**64 and keeps the draw sequence simple
        return self.next_u64() % bound


def partial_shuffle(items: Sequence[T], k: int, rng: SplitMix64) -> list[T]:
    """First k entries of a forward Fisher-Yates shuffle of ``items``.

    Step j swaps position j with j + (next_u64 mod (len - j)).
    """
    pool = list(items)
    n = len(pool)
    if not 0 <= k <= n:
        raise ValueError(f"k={k} outside 0..{n}")
    for j in range(k):
        r = j + rng.below(n - j)
        pool[j], pool[r] = pool[r], pool[j]
    return pool[:k]


def sample_without_replacement(items: Sequence[T], k: int, seed: int) -> list[T]:
    """Deterministic uniform k-sample of ``items`` (in the given order) for ``seed``."""
    return partial_shuffle(items, k, SplitMix64(seed))
