"""Sparsity of a labeled partition: product of normalized part sizes
over total crossing weight.

Computed in log space so many-way partitions (p processors means p
normalized factors) cannot underflow; the two-way DTG case agrees with
the exact Fraction arithmetic used by the partitioners.
"""

from __future__ import annotations

import math

from hdastar.errors import ConfigError


def sparsity_of(n_parts: int, part_of, sizes, weighted_edges) -> float:
    """Generic sparsity.

    `part_of(u)` labels an endpoint, `sizes[k]` is part k's node count,
    `weighted_edges` yields (u, v, w). Crossing weight 0 with all parts
    nonempty returns +inf; an empty part is an error.
    """
    if n_parts < 2:
        raise ConfigError("need at least two parts")
    total = sum(sizes)
    if total == 0:
        raise ConfigError("empty graph")
    if any(s == 0 for s in sizes):
        raise ConfigError("sparsity undefined when a part is empty")
    cut = 0.0
    for u, v, w in weighted_edges:
        if part_of(u) != part_of(v):
            cut += w
    if cut == 0.0:
        return math.inf
    log_num = sum(math.log(s) - math.log(total) for s in sizes)
    return math.exp(log_num - math.log(cut))


def partition_sparsity(partition) -> float:
    """Sparsity of a two-way DTG partition (exact path, float result)."""
    value = partition.sparsity()
    return value if value == math.inf else float(value)


def workload_sparsity(wg, strategy, p: int | None = None) -> float:
    """Sparsity of a strategy's p-way split of a workload graph."""
    if p is None:
        p = strategy.p
    owners = [strategy.owner(s) for s in wg.states]
    sizes = [0] * p
    for o in owners:
        sizes[o] += 1
    edges = ((i, j, 1.0) for i, j in wg.edges)
    return sparsity_of(p, lambda i: owners[i], sizes, edges)
