from hdastar.hashing.zobrist import ZobristTable, zobrist_hash
from hdastar.hashing.projection import (
    AbstractZobristTable,
    FeatureProjection,
    azh_hash,
    grid_block_projection,
    tile_block_projection,
)
from hdastar.hashing.perfect import perfect_hash_tiles, permutation_rank
from hdastar.hashing.state_abstraction import (
    StateAbstraction,
    dahda_threshold,
    sdd_greedy_abstraction,
)
from hdastar.hashing.strategies import STRATEGY_REGISTRY, make_strategy, strategies_for

__all__ = [
    "AbstractZobristTable",
    "FeatureProjection",
    "STRATEGY_REGISTRY",
    "StateAbstraction",
    "ZobristTable",
    "azh_hash",
    "dahda_threshold",
    "grid_block_projection",
    "make_strategy",
    "perfect_hash_tiles",
    "permutation_rank",
    "sdd_greedy_abstraction",
    "strategies_for",
    "tile_block_projection",
    "zobrist_hash",
]
