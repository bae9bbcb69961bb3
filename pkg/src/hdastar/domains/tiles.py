"""Sliding-tile puzzle.

A state stores the position of every tile: ``state[i]`` is the board
cell of tile ``i``, with tile 0 the blank. The blank therefore rides
along implicitly and is not a hashing feature; features are the
(tile, position) pairs of the real tiles only.
"""

from __future__ import annotations

import hashlib

from hdastar.errors import ConfigError
from hdastar.domains.base import Domain


class TilePuzzle(Domain):
    kind = "tiles"

    def __init__(self, width: int, height: int, start: bytes):
        if width < 2 or height < 2:
            raise ConfigError("tile board must be at least 2x2")
        n = width * height
        if sorted(start) != list(range(n)):
            raise ConfigError("start is not a permutation of board cells")
        self.width = width
        self.height = height
        self.size = n
        self.start = bytes(start)
        # goal: tile i sits at cell i (blank in the top-left corner)
        self.goal = bytes(range(n))
        self._neighbors = [self._cell_neighbors(c) for c in range(n)]

    def _cell_neighbors(self, cell: int) -> tuple[int, ...]:
        w = self.width
        x, y = cell % w, cell // w
        out = []
        if x > 0:
            out.append(cell - 1)
        if x + 1 < w:
            out.append(cell + 1)
        if y > 0:
            out.append(cell - w)
        if y + 1 < self.height:
            out.append(cell + w)
        return tuple(out)

    @classmethod
    def from_text(cls, text: str) -> "TilePuzzle":
        """Parse ``<w> <h>`` then a permutation of 0..wh-1 (0 = blank).

        The permutation lists board cells in reading order; entry j is
        the tile sitting at cell j.
        """
        tokens = text.split()
        if len(tokens) < 2:
            raise ConfigError("tile file: missing dimensions")
        w, h = int(tokens[0]), int(tokens[1])
        cells = [int(t) for t in tokens[2:]]
        if len(cells) != w * h:
            raise ConfigError(f"tile file: expected {w * h} cells, got {len(cells)}")
        positions = bytearray(w * h)
        for cell, tile in enumerate(cells):
            if not 0 <= tile < w * h:
                raise ConfigError(f"tile file: tile {tile} out of range")
            positions[tile] = cell
        return cls(w, h, bytes(positions))

    def to_text(self) -> str:
        cells = [0] * self.size
        for tile, cell in enumerate(self.start):
            cells[cell] = tile
        rows = [" ".join(str(cells[r * self.width + c]) for c in range(self.width))
                for r in range(self.height)]
        return f"{self.width} {self.height}\n" + "\n".join(rows) + "\n"

    def initial_state(self):
        return self.start

    def is_goal(self, state) -> bool:
        return state == self.goal

    def successors(self, state):
        blank = state[0]
        pos_to_tile = bytearray(self.size)
        for tile, cell in enumerate(state):
            pos_to_tile[cell] = tile
        for cell in self._neighbors[blank]:
            tile = pos_to_tile[cell]
            nxt = bytearray(state)
            nxt[0] = cell
            nxt[tile] = blank
            yield bytes(nxt), 1

    def heuristic(self, state) -> int:
        w = self.width
        total = 0
        for tile in range(1, self.size):
            cur = state[tile]
            total += abs(cur % w - tile % w) + abs(cur // w - tile // w)
        return total

    def features(self, state):
        return [(tile, state[tile]) for tile in range(1, self.size)]

    def all_features(self):
        return [(tile, cell) for tile in range(1, self.size) for cell in range(self.size)]

    def state_key(self, state) -> str:
        return "-".join(str(c) for c in state)

    def parse_state_key(self, key: str):
        return bytes(int(t) for t in key.split("-"))

    def instance_id(self) -> str:
        payload = f"tiles:{self.width}x{self.height}:{self.state_key(self.start)}"
        return hashlib.sha256(payload.encode()).hexdigest()[:12]

    def is_solvable(self) -> bool:
        """Permutation-parity reachability test against the goal state."""
        cells = [0] * self.size
        for tile, cell in enumerate(self.start):
            cells[cell] = tile
        perm = [t for t in cells if t != 0]
        inversions = sum(
            1
            for i in range(len(perm))
            for j in range(i + 1, len(perm))
            if perm[i] > perm[j]
        )
        if self.width % 2 == 1:
            return inversions % 2 == 0
        blank_row = self.start[0] // self.width
        return (inversions + blank_row) % 2 == 0
