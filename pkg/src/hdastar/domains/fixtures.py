"""Authored benchmark tasks built programmatically.

The logistics-style task models a package moving over the road map of
two cities (10 and 6 locations) that are joined by a single flight leg,
plus the vehicles that serve them. Package movement is encoded as one
operator per direction of each road/flight edge, so the package
variable's transition graph is exactly the road map with uniform edge
weights.
"""

from __future__ import annotations

from itertools import combinations

from hdastar.domains.sas import Operator, SasTask

# City layout for the package variable (16 locations).
# Values 0..5  : city B  (0 = airport-B, 5 = remote village reached only from 0)
# Values 6..15 : city A  (6 = airport-A)
CITY_B = list(range(0, 6))
CITY_A = list(range(6, 16))


def logistics_road_edges() -> list[tuple[int, int]]:
    edges = set()
    # city B: fully connected core 0..4, village 5 hangs off the airport
    for u, v in combinations(range(5), 2):
        edges.add((u, v))
    edges.add((0, 5))
    # flight leg between the airports
    edges.add((0, 6))
    # inter-city highways serving the B core
    for u, v in ((1, 7), (2, 8), (3, 9), (4, 10), (1, 11), (2, 12)):
        edges.add((u, v))
    # city A: fully connected except among the three outskirts 13..15
    for u, v in combinations(range(6, 16), 2):
        if {u, v} <= {13, 14, 15}:
            continue
        edges.add((u, v))
    return sorted(edges)


def logistics_task(include_vehicles: bool = True) -> SasTask:
    """2 cities, 10/6 locations, trucks and an airplane, one package.

    The package variable has 16 values and 120 affecting operators
    (2 per road/flight edge), so every edge weighs 2/120 = 1/60.
    """
    variables = ["pkg"]
    domains = [16]
    if include_vehicles:
        variables += ["truck-a", "truck-b", "plane"]
        domains += [10, 6, 2]
    ops: list[Operator] = []

    def move(name, var, u, v):
        ops.append(Operator(name, 1, ((var, u),), ((var, v),)))

    for u, v in logistics_road_edges():
        tag = "fly" if (u, v) == (0, 6) else "drive"
        move(f"{tag}-pkg-{u}-{v}", 0, u, v)
        move(f"{tag}-pkg-{v}-{u}", 0, v, u)

    if include_vehicles:
        # truck A drives the city A road map (values are offsets into CITY_A)
        for u, v in logistics_road_edges():
            if u in CITY_A and v in CITY_A:
                move(f"drive-truck-a-{u}-{v}", 1, u - 6, v - 6)
                move(f"drive-truck-a-{v}-{u}", 1, v - 6, u - 6)
        # truck B drives the city B road map
        for u, v in logistics_road_edges():
            if u in CITY_B and v in CITY_B:
                move(f"drive-truck-b-{u}-{v}", 2, u, v)
                move(f"drive-truck-b-{v}-{u}", 2, v, u)
        # the airplane shuttles between the airports
        move("fly-plane-a-b", 3, 0, 1)
        move("fly-plane-b-a", 3, 1, 0)

    init = [15] + ([0, 0, 0] if include_vehicles else [])
    goal = ((0, 5),)  # deliver the package to the remote village
    return SasTask(variables, domains, ops, tuple(init), goal)


def tile_puzzle_task(width: int, height: int) -> SasTask:
    """SAS+ encoding of the sliding-tile puzzle.

    One position variable per real tile plus one for the blank. Each
    operator slides one tile between two adjacent cells through the
    blank, so every tile variable's transition graph is the board
    adjacency graph with uniform edge weights.
    """
    n = width * height
    variables = [f"tile-{i}" for i in range(1, n)] + ["blank"]
    domains = [n] * n
    blank_var = n - 1

    def adjacent(cell):
        x, y = cell % width, cell // width
        if x + 1 < width:
            yield cell + 1
        if y + 1 < height:
            yield cell + width

    ops = []
    for tile in range(1, n):
        tvar = tile - 1
        for p in range(n):
            for q in adjacent(p):
                for a, b in ((p, q), (q, p)):
                    ops.append(Operator(
                        f"move-{tile}-{a}-{b}", 1,
                        ((tvar, a), (blank_var, b)),
                        ((tvar, b), (blank_var, a))))
    # start at the goal layout: tile i at cell i, blank at cell 0
    init = tuple(list(range(1, n)) + [0])
    goal = tuple((v, init[v]) for v in range(n))
    return SasTask(variables, domains, ops, init, goal)
