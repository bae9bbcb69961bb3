"""4-connected grid pathfinding with unit move costs.

States are cell indices ``y * width + x``. A state contributes two
hashing features, one per coordinate axis, so block projections can
coarsen each axis independently.
"""

from __future__ import annotations

import hashlib

from hdastar.errors import ConfigError
from hdastar.domains.base import Domain

AXIS_X = 0
AXIS_Y = 1


class GridMap(Domain):
    kind = "grid"

    def __init__(self, width: int, height: int, obstacles, start: tuple[int, int], goal: tuple[int, int]):
        self.width = width
        self.height = height
        self.blocked = bytearray(width * height)
        for x, y in obstacles:
            self.blocked[y * width + x] = 1
        sx, sy = start
        gx, gy = goal
        if not (0 <= sx < width and 0 <= sy < height):
            raise ConfigError("start outside the map")
        if not (0 <= gx < width and 0 <= gy < height):
            raise ConfigError("goal outside the map")
        if self.blocked[sy * width + sx] or self.blocked[gy * width + gx]:
            raise ConfigError("start and goal must be free cells")
        self.start_cell = sy * width + sx
        self.goal_cell = gy * width + gx

    @classmethod
    def from_text(cls, text: str) -> "GridMap":
        """Parse ``<w> <h>``, h rows of ``.``/``#``, then start/goal lines."""
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise ConfigError("grid file is empty")
        try:
            w, h = (int(t) for t in lines[0].split())
        except ValueError as exc:
            raise ConfigError(f"grid file: bad dimension line: {lines[0]!r}") from exc
        if len(lines) < 1 + h + 2:
            raise ConfigError("grid file: missing rows or start/goal lines")
        obstacles = []
        for y in range(h):
            row = lines[1 + y].strip()
            if len(row) != w:
                raise ConfigError(f"grid file: row {y} has length {len(row)}, expected {w}")
            for x, ch in enumerate(row):
                if ch == "#":
                    obstacles.append((x, y))
                elif ch != ".":
                    raise ConfigError(f"grid file: bad cell {ch!r} at ({x},{y})")
        start = _parse_point(lines[1 + h], "start")
        goal = _parse_point(lines[2 + h], "goal")
        return cls(w, h, obstacles, start, goal)

    def to_text(self) -> str:
        rows = []
        for y in range(self.height):
            rows.append("".join(
                "#" if self.blocked[y * self.width + x] else "."
                for x in range(self.width)))
        sx, sy = self.start_cell % self.width, self.start_cell // self.width
        gx, gy = self.goal_cell % self.width, self.goal_cell // self.width
        return (f"{self.width} {self.height}\n" + "\n".join(rows)
                + f"\nstart {sx} {sy}\ngoal {gx} {gy}\n")

    def initial_state(self):
        return self.start_cell

    def is_goal(self, state) -> bool:
        return state == self.goal_cell

    def successors(self, state):
        w = self.width
        x, y = state % w, state // w
        blocked = self.blocked
        if x > 0 and not blocked[state - 1]:
            yield state - 1, 1
        if x + 1 < w and not blocked[state + 1]:
            yield state + 1, 1
        if y > 0 and not blocked[state - w]:
            yield state - w, 1
        if y + 1 < self.height and not blocked[state + w]:
            yield state + w, 1

    def heuristic(self, state) -> int:
        w = self.width
        return abs(state % w - self.goal_cell % w) + abs(state // w - self.goal_cell // w)

    def features(self, state):
        return [(AXIS_X, state % self.width), (AXIS_Y, state // self.width)]

    def all_features(self):
        return ([(AXIS_X, x) for x in range(self.width)]
                + [(AXIS_Y, y) for y in range(self.height)])

    def state_key(self, state) -> str:
        return f"{state % self.width},{state // self.width}"

    def parse_state_key(self, key: str):
        x, y = (int(t) for t in key.split(","))
        return y * self.width + x

    def instance_id(self) -> str:
        payload = (f"grid:{self.width}x{self.height}:{self.start_cell}:{self.goal_cell}:"
                   + bytes(self.blocked).hex())
        return hashlib.sha256(payload.encode()).hexdigest()[:12]

    def default_block(self) -> int:
        """Block edge for the abstraction presets, scaled with map size."""
        return max(1, min(self.width, self.height) // 50)


def _parse_point(line: str, tag: str) -> tuple[int, int]:
    parts = line.split()
    if len(parts) != 3 or parts[0] != tag:
        raise ConfigError(f"grid file: expected '{tag} x y', got {line!r}")
    return int(parts[1]), int(parts[2])
