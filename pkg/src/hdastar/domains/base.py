"""Domain interface used by the search engines and hashing strategies.

A domain instance is immutable after construction and safe to share
across worker threads. States are small hashable values (bytes, int or
tuple); all bookkeeping keyed by state uses the state value itself, so
hash collisions between distinct states are harmless.
"""

from __future__ import annotations

from typing import Hashable, Iterable, Tuple

State = Hashable
Feature = Tuple[int, int]


class Domain:
    kind: str = "abstract"

    def initial_state(self) -> State:
        raise NotImplementedError

    def is_goal(self, state: State) -> bool:
        raise NotImplementedError

    def successors(self, state: State) -> Iterable[tuple[State, int]]:
        """Yield (successor state, nonnegative integer move cost)."""
        raise NotImplementedError

    def heuristic(self, state: State) -> int:
        """Admissible estimate of remaining cost."""
        raise NotImplementedError

    def features(self, state: State) -> Iterable[Feature]:
        """Decompose a state into hashable (index, value) features."""
        raise NotImplementedError

    def all_features(self) -> list[Feature]:
        """The full feature universe; every features(s) is a subset."""
        raise NotImplementedError

    def state_key(self, state: State) -> str:
        """Stable text form of a state for trace/workload files."""
        raise NotImplementedError

    def parse_state_key(self, key: str) -> State:
        raise NotImplementedError

    def instance_id(self) -> str:
        """Short digest identifying the instance (start, goal, topology)."""
        raise NotImplementedError
