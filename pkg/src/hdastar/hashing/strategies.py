"""Work-distribution strategy registry.

A strategy maps a state to a 64-bit hash and an owner worker
(hash modulo worker count). Canonical names follow the
HDA*[hash, abstraction] notation; lowercase aliases are accepted on the
command line. Hash collisions between distinct states are harmless:
open/closed bookkeeping is keyed by the full state.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from hdastar.errors import ConfigError
from hdastar.hashing.perfect import perfect_hash_grid, perfect_hash_sas, perfect_hash_tiles
from hdastar.hashing.projection import (
    AbstractZobristTable,
    FeatureProjection,
    grid_block_projection,
    tile_block_projection,
)
from hdastar.hashing.state_abstraction import dahda_threshold, sdd_greedy_abstraction
from hdastar.hashing.zobrist import ZobristTable

DEFAULT_SEED = 0xC0FFEE


@dataclass
class DistributionStrategy:
    name: str
    p: int
    seed: int
    params: dict = field(default_factory=dict)

    def hash_state(self, state) -> int:
        raise NotImplementedError

    def owner(self, state) -> int:
        return self.hash_state(state) % self.p


class XorFoldStrategy(DistributionStrategy):
    """xor-fold of per-feature words (plain or composed table)."""

    def __init__(self, name, p, seed, domain, words, params=None):
        super().__init__(name, p, seed, params or {})
        self._features = domain.features
        self._words = words

    def hash_state(self, state) -> int:
        h = 0
        words = self._words
        for feature in self._features(state):
            h ^= words[feature]
        return h


class CallableStrategy(DistributionStrategy):
    def __init__(self, name, p, seed, fn, params=None):
        super().__init__(name, p, seed, params or {})
        self._fn = fn

    def hash_state(self, state) -> int:
        return self._fn(state)


def _zobrist(domain, p, seed, params, name):
    table = ZobristTable.build(domain.all_features(), seed)
    return XorFoldStrategy(name, p, seed, domain, table.words)


def _projected(domain, p, seed, params, name, projection: FeatureProjection):
    table = AbstractZobristTable.build(projection, domain.all_features(), seed)
    return XorFoldStrategy(name, p, seed, domain, table.composed.words,
                           params={"projection": projection.name})


def _retained_tiles(domain, params) -> tuple:
    raw = params.get("retain", "1,2,3")
    if isinstance(raw, str):
        tiles = tuple(int(t) for t in raw.split(",") if t != "")
    else:
        tiles = tuple(raw)
    tiles = tuple(t for t in tiles if 1 <= t < domain.size)
    if not tiles:
        raise ConfigError("state abstraction needs at least one retained tile")
    return tiles


def _tiles_state_projection(domain, tiles) -> FeatureProjection:
    mapping = {}
    for tile, cell in domain.all_features():
        mapping[(tile, cell)] = (tile, cell) if tile in tiles else (tile, 0)
    return FeatureProjection(mapping, name=f"tiles-retain-{','.join(map(str, tiles))}")


def _sas_retained_projection(domain, retained, tag) -> FeatureProjection:
    keep = set(retained)
    mapping = {}
    for var, val in domain.all_features():
        mapping[(var, val)] = (var, val) if var in keep else (var, 0)
    return FeatureProjection(mapping, name=tag)


def _block_of(params, domain):
    block = params.get("block")
    return int(block) if block is not None else domain.default_block()


# builders keyed by (registry name, domain kind)

def _build_z(domain, p, seed, params, name):
    return _zobrist(domain, p, seed, params, name)


def _build_p(domain, p, seed, params, name):
    if domain.kind == "tiles":
        fn = perfect_hash_tiles
    elif domain.kind == "grid":
        fn = lambda s: perfect_hash_grid(s, domain)
    else:
        fn = lambda s: perfect_hash_sas(s, domain)
    return CallableStrategy(name, p, seed, fn)


def _build_z_astate(domain, p, seed, params, name):
    if domain.kind == "tiles":
        projection = _tiles_state_projection(domain, _retained_tiles(domain, params))
    elif domain.kind == "grid":
        projection = grid_block_projection(domain, _block_of(params, domain))
    else:
        raise ConfigError(f"{name} on SAS tasks: use the SDD variants")
    return _projected(domain, p, seed, params, name, projection)


def _build_p_astate(domain, p, seed, params, name):
    if domain.kind == "tiles":
        tiles = _retained_tiles(domain, params)
        size = domain.size

        def fn(state, _tiles=tiles, _size=size):
            rank = 0
            for t in _tiles:
                rank = rank * _size + state[t]
            return rank
    elif domain.kind == "grid":
        block = _block_of(params, domain)
        blocks_y = (domain.height + block - 1) // block

        def fn(state, _b=block, _ny=blocks_y, _w=domain.width):
            return (state % _w) // _b * _ny + (state // _w) // _b
    else:
        raise ConfigError(f"{name} on SAS tasks: use the SDD variants")
    return CallableStrategy(name, p, seed, fn, params=dict(params))


def _build_blocks(domain, p, seed, params, name):
    if domain.kind == "tiles":
        projection = tile_block_projection(domain)
    elif domain.kind == "grid":
        projection = grid_block_projection(domain, _block_of(params, domain))
    else:
        raise ConfigError(f"{name} is a hand-crafted preset for tiles/grid")
    return _projected(domain, p, seed, params, name, projection)


def _build_sdd(domain, p, seed, params, name):
    nmax = int(params.get("nmax", 1000))
    abstraction = sdd_greedy_abstraction(domain.task, max_abstract_nodes=nmax)
    projection = _sas_retained_projection(domain, abstraction.retained, f"sdd-{nmax}")
    strategy = _projected(domain, p, seed, params, name, projection)
    strategy.params.update({"nmax": nmax, "retained": list(abstraction.retained)})
    return strategy


def _build_sdd_dynamic(domain, p, seed, params, name):
    fraction = float(params.get("fraction", 0.30))
    budget = dahda_threshold(domain.task, fraction)
    abstraction = sdd_greedy_abstraction(domain.task, max_features=budget)
    projection = _sas_retained_projection(domain, abstraction.retained,
                                          f"sdd-dynamic-{fraction:g}")
    strategy = _projected(domain, p, seed, params, name, projection)
    strategy.params.update({"fraction": fraction, "feature_budget": budget,
                            "retained": list(abstraction.retained)})
    return strategy


def _build_dtg(objective=None, greedy=False, fluency_default=0.0):
    def build(domain, p, seed, params, name):
        from hdastar.featuregen.grazhda import grazhda_projection, greedy_projection
        if domain.kind != "sas":
            raise ConfigError(f"{name} requires a SAS task")
        fraction = float(params.get("fluency", fluency_default))
        if greedy:
            result = greedy_projection(domain.task, fluency_fraction=fraction)
        else:
            cap = int(params.get("vertex_cap", 25))
            result = grazhda_projection(domain.task, objective,
                                        fluency_fraction=fraction, vertex_cap=cap)
        strategy = _projected(domain, p, seed, params, name, result.projection)
        strategy.params["projection"] = result.projection.name
        return strategy
    return build


@dataclass(frozen=True)
class StrategyInfo:
    name: str
    builder: object
    kinds: tuple
    summary: str


_ENTRIES = [
    StrategyInfo("HDA*[Z]", _build_z, ("tiles", "grid", "sas"),
                 "Zobrist hash of raw features"),
    StrategyInfo("HDA*[P]", _build_p, ("tiles", "grid", "sas"),
                 "perfect hash (lexicographic state rank)"),
    StrategyInfo("HDA*[Z,A_state]", _build_z_astate, ("tiles", "grid"),
                 "Zobrist over a hand-crafted state abstraction"),
    StrategyInfo("HDA*[P,A_state]", _build_p_astate, ("tiles", "grid"),
                 "perfect hash over a hand-crafted state abstraction"),
    StrategyInfo("HDA*[Z,A_feature/blocks]", _build_blocks, ("tiles", "grid"),
                 "abstract Zobrist with hand-crafted block features"),
    StrategyInfo("HDA*[Z,A_state/SDD]", _build_sdd, ("sas",),
                 "Zobrist over greedy SDD abstraction (static size)"),
    StrategyInfo("HDA*[Z,A_state/SDD_dynamic]", _build_sdd_dynamic, ("sas",),
                 "Zobrist over SDD abstraction sized by feature fraction"),
    StrategyInfo("HDA*[Z,A_feature/DTG_greedy]", _build_dtg(greedy=True), ("sas",),
                 "abstract Zobrist, greedy DTG bisection"),
    StrategyInfo("HDA*[Z,A_feature/DTG_fluency]",
                 _build_dtg(greedy=True, fluency_default=0.30), ("sas",),
                 "greedy DTG bisection after fluency filtering"),
    StrategyInfo("HDA*[Z,A_feature/DTG_sparsity]", _build_dtg(objective="sparsity"),
                 ("sas",), "abstract Zobrist, exact sparsest-cut DTG partitioning"),
    StrategyInfo("HDA*[Z,A_feature/DTG_co_lb]", _build_dtg(objective="co_lb"),
                 ("sas",), "abstract Zobrist, exact min(CO+LB) DTG partitioning"),
]

STRATEGY_REGISTRY = {info.name: info for info in _ENTRIES}

_ALIASES = {
    "zhda": "HDA*[Z]",
    "phda": "HDA*[P]",
    "ahda": "HDA*[Z,A_state]",
    "ahda-p": "HDA*[P,A_state]",
    "azhda-blocks": "HDA*[Z,A_feature/blocks]",
    "ahda-sdd": "HDA*[Z,A_state/SDD]",
    "dahda": "HDA*[Z,A_state/SDD_dynamic]",
    "gazhda": "HDA*[Z,A_feature/DTG_greedy]",
    "fazhda": "HDA*[Z,A_feature/DTG_fluency]",
    "grazhda-sparsity": "HDA*[Z,A_feature/DTG_sparsity]",
    "grazhda-co-lb": "HDA*[Z,A_feature/DTG_co_lb]",
}


def resolve_name(name: str) -> str:
    if name in STRATEGY_REGISTRY:
        return name
    if name in _ALIASES:
        return _ALIASES[name]
    known = sorted(STRATEGY_REGISTRY) + sorted(_ALIASES)
    raise ConfigError(f"unknown strategy {name!r}; known strategies: {', '.join(known)}")


def strategies_for(kind: str) -> list[str]:
    return [info.name for info in _ENTRIES if kind in info.kinds]


def make_strategy(name: str, domain, p: int, seed: int = DEFAULT_SEED,
                  params: dict | None = None) -> DistributionStrategy:
    if p < 1:
        raise ConfigError("worker count must be >= 1")
    canonical = resolve_name(name)
    info = STRATEGY_REGISTRY[canonical]
    if domain.kind not in info.kinds:
        raise ConfigError(
            f"strategy {canonical!r} does not support {domain.kind!r} domains; "
            f"applicable strategies: {', '.join(strategies_for(domain.kind))}")
    return info.builder(domain, p, seed, dict(params or {}), canonical)
