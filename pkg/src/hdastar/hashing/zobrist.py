"""Zobrist hashing: xor-fold of per-feature random words.

A state's hash is the xor of one precomputed 64-bit word per feature,
so changing a single feature flips the hash by exactly two table words.
The owning worker is the hash modulo the worker count.
"""

from __future__ import annotations

from dataclasses import dataclass

from hdastar.errors import ConfigError
from hdastar.rng import words_for


@dataclass(frozen=True)
class ZobristTable:
    words: dict        # feature -> 64-bit word
    seed: int

    @classmethod
    def build(cls, features, seed: int) -> "ZobristTable":
        return cls(words_for(features, seed), seed)

    def word(self, feature) -> int:
        try:
            return self.words[feature]
        except KeyError:
            raise ConfigError(f"feature {feature!r} missing from hash table") from None


def zobrist_hash(state, domain, table: ZobristTable) -> int:
    """Fold the table words of all features of `state`."""
    h = 0
    words = table.words
    try:
        for feature in domain.features(state):
            h ^= words[feature]
    except KeyError as exc:
        raise ConfigError(f"feature {exc.args[0]!r} missing from hash table") from None
    return h
