"""Deterministic 64-bit word stream for hash table initialization.

xorshift64* generator; the seed is recorded in reports so any hash table
can be rebuilt bit-for-bit.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1

_SEED_SCRAMBLE = 0x9E3779B97F4A7C15
_STAR_MULT = 0x2545F4914F6CDD1D


class WordStream:
    """Sequence of pseudo-random 64-bit words from a fixed seed."""

    def __init__(self, seed: int):
        self.seed = seed & MASK64
        # xorshift state must be nonzero
        self._state = (self.seed ^ _SEED_SCRAMBLE) & MASK64 or _SEED_SCRAMBLE

    def next_word(self) -> int:
        x = self._state
        x ^= (x >> 12)
        x ^= (x << 25) & MASK64
        x ^= (x >> 27)
        self._state = x
        return (x * _STAR_MULT) & MASK64

    def take(self, n: int) -> list[int]:
        return [self.next_word() for _ in range(n)]


def words_for(keys, seed: int) -> dict:
    """Assign one word per key, in sorted key order.

    Sorting makes the table independent of the caller's iteration order,
    so identical (key set, seed) pairs always yield identical tables.
    """
    stream = WordStream(seed)
    return {key: stream.next_word() for key in sorted(keys)}
