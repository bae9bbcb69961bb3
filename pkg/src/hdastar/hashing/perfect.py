"""Perfect hashes: bijective state ranks used as distribution hashes.

These ranks were designed for compact state storage, not for work
distribution; they are included as the baseline whose owner assignment
is highly structured (and, as the instrumentation shows, poorly suited
to load balancing the relevant part of a search space).
"""

from __future__ import annotations

from hdastar.errors import ConfigError

MAX_PERMUTATION = 20  # 21! overflows 64 bits


def permutation_rank(perm) -> int:
    """Lexicographic rank of a permutation of 0..k-1 (Lehmer code)."""
    k = len(perm)
    if k > MAX_PERMUTATION:
        raise ConfigError(f"permutation rank overflows 64 bits for k={k}")
    fact_table = [1] * (k + 1)
    for i in range(2, k + 1):
        fact_table[i] = fact_table[i - 1] * i
    rank = 0
    remaining = list(range(k))
    for i, value in enumerate(perm):
        smaller = remaining.index(value)
        rank += smaller * fact_table[k - 1 - i]
        remaining.pop(smaller)
    return rank


def perfect_hash_tiles(state) -> int:
    """Rank of the tile-position vector (tile i at cell state[i])."""
    return permutation_rank(bytes(state))


def perfect_hash_grid(state, domain) -> int:
    """Row-major cell index: x * height + y."""
    width = domain.width
    x, y = state % width, state // width
    return x * domain.height + y


def perfect_hash_sas(state, domain) -> int:
    """Mixed-radix rank of the value tuple."""
    rank = 0
    for var, val in enumerate(state):
        rank = rank * domain.task.domains[var] + val
    return rank
