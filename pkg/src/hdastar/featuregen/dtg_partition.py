"""Two-way partitioning of domain transition graphs.

Two partitioners live here. The greedy bisection seeds one side with a
minimum-degree vertex and grows it by shared edge count until the sides
are balanced; it optimizes load balance first and locality only
greedily. The branch-and-bound partitioner is exact: it maximizes
sparsity (product of normalized side sizes over cut weight) or
minimizes cut-ratio + imbalance, over every nontrivial bipartition.

All objective arithmetic is exact (Fractions), so results are
deterministic and comparable against brute force without tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from hdastar.errors import ConfigError

SPARSITY = "sparsity"
CO_LB = "co_lb"
OBJECTIVES = (SPARSITY, CO_LB)

DEFAULT_BB_VERTEX_CAP = 25


@dataclass(frozen=True)
class WeightedGraph:
    """Undirected graph with rational edge weights, vertices 0..n-1."""

    n: int
    weights: dict  # (u, v) with u < v -> Fraction

    def __post_init__(self):
        for (u, v), w in self.weights.items():
            if not (0 <= u < v < self.n):
                raise ConfigError(f"bad edge ({u}, {v})")
            if w < 0:
                raise ConfigError("edge weights must be nonnegative")

    @classmethod
    def from_dtg(cls, dtg) -> "WeightedGraph":
        return cls(dtg.n_values, dict(dtg.weights()))

    def degree(self, v: int) -> int:
        return sum(1 for (a, b) in self.weights if v in (a, b))

    def weighted_degree(self, v: int) -> Fraction:
        return sum((w for (a, b), w in self.weights.items() if v in (a, b)),
                   Fraction(0))

    def total_weight(self) -> Fraction:
        return sum(self.weights.values(), Fraction(0))


@dataclass
class DtgPartition:
    """Assignment of DTG vertices to two sides."""

    graph: WeightedGraph
    side: tuple  # side[v] in {0, 1}
    degenerate: bool = False  # single-vertex graph: S2 is empty
    method: str = ""
    _cut: Fraction | None = field(default=None, repr=False)

    @property
    def s1(self) -> tuple:
        return tuple(v for v in range(self.graph.n) if self.side[v] == 0)

    @property
    def s2(self) -> tuple:
        return tuple(v for v in range(self.graph.n) if self.side[v] == 1)

    @property
    def sizes(self) -> tuple[int, int]:
        n1 = sum(1 for s in self.side if s == 0)
        return n1, self.graph.n - n1

    def cut_edges(self) -> list:
        side = self.side
        return [e for e in self.graph.weights if side[e[0]] != side[e[1]]]

    def cut_weight(self) -> Fraction:
        if self._cut is None:
            side = self.side
            self._cut = sum((w for (u, v), w in self.graph.weights.items()
                             if side[u] != side[v]), Fraction(0))
        return self._cut

    def sparsity(self) -> Fraction | float:
        """(product of normalized side sizes) / cut weight; inf on zero cut."""
        n1, n2 = self.sizes
        if n1 == 0 or n2 == 0:
            raise ConfigError("sparsity undefined for an empty side")
        cut = self.cut_weight()
        if cut == 0:
            return float("inf")
        return Fraction(n1, self.graph.n) * Fraction(n2, self.graph.n) / cut

    def co_lb(self) -> Fraction:
        """cut ratio + max side / mean side (smaller is better)."""
        n1, n2 = self.sizes
        total = self.graph.total_weight()
        ratio = self.cut_weight() / total if total > 0 else Fraction(0)
        return ratio + Fraction(2 * max(n1, n2), self.graph.n)


def greedy_afg(graph: WeightedGraph) -> DtgPartition:
    """Greedy balanced bisection.

    Seed S1 with a minimum-degree vertex, repeatedly add the unassigned
    vertex sharing the most edges with S1 while |S1| < n/2, put the rest
    in S2. Guarantees |S2| <= |S1| <= |S2| + 1. Ties (degree or shared
    edges) break toward the lowest vertex id. Edge multiplicity and
    weights are ignored; only adjacency counts.
    """
    n = graph.n
    if n < 1:
        raise ConfigError("cannot partition an empty graph")
    adjacency = [set() for _ in range(n)]
    for u, v in graph.weights:
        adjacency[u].add(v)
        adjacency[v].add(u)
    seed = min(range(n), key=lambda v: (len(adjacency[v]), v))
    in_s1 = [False] * n
    in_s1[seed] = True
    count = 1
    while count < n / 2:
        best = None
        for v in range(n):
            if in_s1[v]:
                continue
            shared = sum(1 for u in adjacency[v] if in_s1[u])
            if best is None or shared > best[0]:
                best = (shared, v)
        in_s1[best[1]] = True
        count += 1
    side = tuple(0 if flag else 1 for flag in in_s1)
    return DtgPartition(graph, side, degenerate=(n == 1), method="greedy")


def _objective_key(side, graph: WeightedGraph, objective: str):
    """Sortable exact score; larger is better for both objectives."""
    n1 = sum(1 for s in side if s == 0)
    n2 = graph.n - n1
    cut = sum((w for (u, v), w in graph.weights.items() if side[u] != side[v]),
              Fraction(0))
    if objective == SPARSITY:
        if cut == 0:
            # zero cuts beat every finite sparsity; prefer balance among them
            return (2, n1 * n2)
        return (1, Fraction(n1, graph.n) * Fraction(n2, graph.n) / cut)
    total = graph.total_weight()
    ratio = cut / total if total > 0 else Fraction(0)
    value = ratio + Fraction(2 * max(n1, n2), graph.n)
    return (0, -value)


def brute_force_partition(graph: WeightedGraph, objective: str = SPARSITY) -> DtgPartition:
    """Exhaustive oracle over all 2^(n-1) - 1 nontrivial bipartitions."""
    if objective not in OBJECTIVES:
        raise ConfigError(f"unknown objective {objective!r}")
    n = graph.n
    if n < 2:
        raise ConfigError("need at least two vertices")
    best = None
    for mask in range(1, 1 << (n - 1)):
        side = (0,) + tuple((mask >> i) & 1 for i in range(n - 1))
        if all(s == 0 for s in side):
            continue
        key = (_objective_key(side, graph, objective), tuple(-s for s in side))
        if best is None or key > best[0]:
            best = (key, side)
    return DtgPartition(graph, best[1], method=f"brute/{objective}")


def partition_dtg_bb(graph: WeightedGraph, objective: str = SPARSITY,
                     vertex_cap: int = DEFAULT_BB_VERTEX_CAP):
    """Exact depth-first branch-and-bound over bipartitions.

    Vertices are assigned in descending weighted-degree order; a branch
    is pruned when an optimistic bound (best reachable size product over
    the cut weight already forced, and correspondingly for the cut-ratio
    objective) cannot beat the incumbent. Equal-valued optima resolve to
    the lexicographically smallest side vector. Above `vertex_cap`
    vertices, falls back to the greedy bisection and flags it.

    Returns (partition, fell_back).
    """
    if objective not in OBJECTIVES:
        raise ConfigError(f"unknown objective {objective!r}")
    n = graph.n
    if n < 2:
        raise ConfigError("need at least two vertices")
    if n > vertex_cap:
        return greedy_afg(graph), True

    order = sorted(range(n), key=lambda v: (-graph.weighted_degree(v), v))
    # force vertex order[0]'s side to 0: halves the space, loses nothing
    adjacency: list[list[tuple[int, Fraction]]] = [[] for _ in range(n)]
    for (u, v), w in graph.weights.items():
        adjacency[u].append((v, w))
        adjacency[v].append((u, w))

    side = [-1] * n
    best: dict = {"key": None, "side": None}
    total = graph.total_weight()

    def best_product(n1: int, n2: int, free: int) -> int:
        """max over k of (n1 + k)(n2 + free - k); quadratic vertex, clamped."""
        lo, hi = 0, free
        k0 = (n2 + free - n1) / 2
        candidates = {lo, hi, min(hi, max(lo, int(k0))), min(hi, max(lo, int(k0) + 1))}
        return max((n1 + k) * (n2 + free - k) for k in candidates)

    def bound_key(cut: Fraction, n1: int, n2: int, free: int):
        """Optimistic objective for any completion of the partial assignment."""
        if objective == SPARSITY:
            prod = best_product(n1, n2, free)
            if cut == 0:
                return (2, prod)
            return (1, Fraction(prod, n * n) / cut)
        ratio = cut / total if total > 0 else Fraction(0)
        floor_max = max(n1, n2, (n + 1) // 2)
        return (0, -(ratio + Fraction(2 * floor_max, n)))

    def descend(idx: int, cut: Fraction, n1: int, n2: int):
        if idx == n:
            if n1 == 0 or n2 == 0:
                return
            # canonical representation: vertex 0 on side 0, so ties break
            # identically to the exhaustive oracle
            assignment = tuple(side) if side[0] == 0 \
                else tuple(1 - s for s in side)
            key = (_objective_key(assignment, graph, objective),
                   tuple(-s for s in assignment))
            if best["key"] is None or key > best["key"]:
                best["key"] = key
                best["side"] = assignment
            return
        if best["key"] is not None:
            if bound_key(cut, n1, n2, n - idx) < best["key"][0]:
                return
        v = order[idx]
        for chosen in (0, 1):
            if idx == 0 and chosen == 1:
                continue
            side[v] = chosen
            extra = Fraction(0)
            for u, w in adjacency[v]:
                if side[u] != -1 and side[u] != chosen:
                    extra += w
            descend(idx + 1, cut + extra, n1 + (chosen == 0), n2 + (chosen == 1))
            side[v] = -1

    descend(0, Fraction(0), 0, 0)
    part = DtgPartition(graph, best["side"], method=f"bb/{objective}")
    return part, False
