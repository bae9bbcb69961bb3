"""Feature projections and abstract Zobrist tables.

A projection is a total many-to-one map from raw features to abstract
feature ids. The abstract table draws one random word per abstract
feature and the composed table hands every raw feature its abstract
feature's word, so hashing with the composed table equals Zobrist
hashing of the projected state: features that stay inside one abstract
class contribute the same word before and after a move, and the hash,
hence the owner, does not change.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from hdastar.errors import ConfigError
from hdastar.rng import words_for
from hdastar.hashing.zobrist import ZobristTable


@dataclass(frozen=True)
class FeatureProjection:
    mapping: dict  # raw feature -> abstract feature id
    name: str = "projection"

    def project(self, feature):
        try:
            return self.mapping[feature]
        except KeyError:
            raise ConfigError(f"projection is not total: missing {feature!r}") from None

    def abstract_features(self):
        return sorted(set(self.mapping.values()))

    @classmethod
    def identity(cls, features) -> "FeatureProjection":
        return cls({f: f for f in features}, name="identity")

    def to_json(self, seed: int | None = None) -> str:
        by_var: dict = {}
        for (var, val), abstract in sorted(self.mapping.items()):
            by_var.setdefault(str(var), {})[str(val)] = list(abstract) \
                if isinstance(abstract, tuple) else abstract
        doc = {"name": self.name, "projection": by_var}
        if seed is not None:
            doc["seed"] = seed
        return json.dumps(doc, indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> tuple["FeatureProjection", int | None]:
        doc = json.loads(text)
        mapping = {}
        for var, values in doc["projection"].items():
            for val, abstract in values.items():
                if isinstance(abstract, list):
                    abstract = tuple(abstract)
                mapping[(int(var), int(val))] = abstract
        return cls(mapping, doc.get("name", "projection")), doc.get("seed")


@dataclass(frozen=True)
class AbstractZobristTable:
    abstract_words: dict   # abstract feature -> word
    composed: ZobristTable  # raw feature -> its abstract feature's word
    seed: int

    @classmethod
    def build(cls, projection: FeatureProjection, features, seed: int) -> "AbstractZobristTable":
        mapping = projection.mapping
        missing = [f for f in features if f not in mapping]
        if missing:
            raise ConfigError(f"projection is not total: missing {missing[:3]!r}")
        abstract_words = words_for({mapping[f] for f in features}, seed)
        composed = ZobristTable({f: abstract_words[mapping[f]] for f in features}, seed)
        return cls(abstract_words, composed, seed)


def azh_hash(state, domain, table: AbstractZobristTable) -> int:
    """Abstract Zobrist hash via the composed raw-feature table."""
    h = 0
    words = table.composed.words
    try:
        for feature in domain.features(state):
            h ^= words[feature]
    except KeyError as exc:
        raise ConfigError(f"feature {exc.args[0]!r} missing from hash table") from None
    return h


def tile_block_projection(domain) -> FeatureProjection:
    """Hand-crafted tile preset: board halves.

    Each tile's position is projected to 0 for the top half of the board
    and 1 for the bottom half (top gets the extra row when the height is
    odd). This is the block layout the automatic DTG partitioning
    recovers on the 15-puzzle.
    """
    split_row = (domain.height + 1) // 2
    mapping = {}
    for tile, cell in domain.all_features():
        mapping[(tile, cell)] = (tile, 0 if cell // domain.width < split_row else 1)
    return FeatureProjection(mapping, name="tile-halves")


def grid_block_projection(domain, block: int | None = None) -> FeatureProjection:
    """k x k block preset for grid maps; default block scales with the map."""
    if block is None:
        block = domain.default_block()
    if block < 1:
        raise ConfigError("block size must be positive")
    mapping = {}
    for axis, coord in domain.all_features():
        mapping[(axis, coord)] = (axis, coord // block)
    return FeatureProjection(mapping, name=f"grid-blocks-{block}")
