"""Seeded random instance generators for benchmarks and tests."""

from __future__ import annotations

import random
from collections import deque

from hdastar.domains.grid import GridMap
from hdastar.domains.tiles import TilePuzzle


def random_tile_instance(seed: int, width: int = 3, height: int = 3,
                         scramble: int = 30) -> TilePuzzle:
    """Scramble the goal board with a random walk of `scramble` moves.

    Never undoes the previous move, so the walk drifts; the optimal
    solution cost is at most `scramble`.
    """
    rng = random.Random(seed)
    puzzle = TilePuzzle(width, height, bytes(range(width * height)))
    state = puzzle.goal
    prev = None
    for _ in range(scramble):
        moves = [s for s, _ in puzzle.successors(state) if s != prev]
        prev = state
        state = rng.choice(moves)
    return TilePuzzle(width, height, state)


def random_tile_permutation(seed: int, width: int = 3, height: int = 3) -> TilePuzzle:
    """Uniform random solvable board."""
    rng = random.Random(seed)
    n = width * height
    while True:
        cells = list(range(n))
        rng.shuffle(cells)
        positions = bytearray(n)
        for cell, tile in enumerate(cells):
            positions[tile] = cell
        puzzle = TilePuzzle(width, height, bytes(positions))
        if puzzle.is_solvable():
            return puzzle


def random_grid(seed: int, width: int = 64, height: int = 64,
                obstacle_density: float = 0.45) -> GridMap:
    """Random obstacle map with a reachable start/goal pair.

    Start and goal are drawn from the largest free component, far apart;
    obstacle layouts are re-sampled until that component has a sensible
    size.
    """
    rng = random.Random(seed)
    n = width * height
    while True:
        blocked = [rng.random() < obstacle_density for _ in range(n)]
        free = [c for c in range(n) if not blocked[c]]
        if not free:
            continue
        component = _largest_component(width, height, blocked)
        if len(component) < max(4, n // 10):
            continue
        cells = sorted(component)
        start = rng.choice(cells)
        far = max(cells, key=lambda c: abs(c % width - start % width)
                  + abs(c // width - start // width))
        candidates = [c for c in cells
                      if abs(c % width - far % width) + abs(c // width - far // width)
                      <= max(width, height) // 4]
        goal = rng.choice(candidates) if candidates else far
        if goal == start:
            continue
        obstacles = [(c % width, c // width) for c in range(n) if blocked[c]]
        return GridMap(width, height, obstacles,
                       (start % width, start // width), (goal % width, goal // width))


def _largest_component(width: int, height: int, blocked) -> set:
    seen = set()
    best: set = set()
    for root in range(width * height):
        if blocked[root] or root in seen:
            continue
        comp = {root}
        queue = deque([root])
        seen.add(root)
        while queue:
            c = queue.popleft()
            x, y = c % width, c // width
            for nx, ny in ((x - 1, y), (x + 1, y), (x, y - 1), (x, y + 1)):
                if 0 <= nx < width and 0 <= ny < height:
                    nc = ny * width + nx
                    if not blocked[nc] and nc not in seen:
                        seen.add(nc)
                        comp.add(nc)
                        queue.append(nc)
        if len(comp) > len(best):
            best = comp
    return best
