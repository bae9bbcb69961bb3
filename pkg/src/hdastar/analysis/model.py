"""Offline overhead model over an explicit workload graph.

Partitioning the relevant states among p workers fixes everything the
model needs: communication overhead is the fraction of edges crossing
partitions, load balance is the largest partition over the mean, search
overhead is p(LB - 1), and the efficiency estimate is the product of
the communication and search efficiencies. The identities hold exactly
by construction and are asserted on every report.
"""

from __future__ import annotations

from dataclasses import dataclass

from hdastar.errors import ConfigError


@dataclass(frozen=True)
class ModelReport:
    strategy: str
    p: int
    c: float
    co: float
    lb: float
    so: float
    ceff: float
    seff: float
    sceff: float
    partition_sizes: tuple
    cross_edges: int
    total_edges: int

    def __post_init__(self):
        assert 0.0 <= self.co <= 1.0
        assert self.lb >= 1.0
        assert self.so == self.p * (self.lb - 1.0)
        assert self.sceff == self.ceff * self.seff

    def as_row(self) -> dict:
        return {
            "strategy": self.strategy,
            "p": self.p,
            "c": self.c,
            "CO": self.co,
            "LB": self.lb,
            "SO": self.so,
            "ceff": self.ceff,
            "seff": self.seff,
            "sceff": self.sceff,
        }


def model_overheads(wg, strategy, p: int | None = None, c: float = 1.0) -> ModelReport:
    """Evaluate one strategy's partition of the workload graph.

    CO is cross-partition edges over total edges (0 for an edgeless
    graph), LB is max partition size over the mean |wg|/p, SO = p(LB-1),
    ceff = 1/(1 + c CO), seff = 1/(1 + SO), sceff = ceff * seff.
    """
    if p is None:
        p = strategy.p
    if wg.n_nodes == 0:
        raise ConfigError("workload graph is empty")
    owners = [strategy.owner(state) for state in wg.states]
    sizes = [0] * p
    for o in owners:
        sizes[o] += 1
    cross = sum(1 for i, j in wg.edges if owners[i] != owners[j])
    total = wg.n_edges
    co = cross / total if total else 0.0
    mean = wg.n_nodes / p
    lb = max(sizes) / mean
    so = p * (lb - 1.0)
    ceff = 1.0 / (1.0 + c * co)
    seff = 1.0 / (1.0 + so)
    return ModelReport(
        strategy=strategy.name, p=p, c=c, co=co, lb=lb, so=so,
        ceff=ceff, seff=seff, sceff=ceff * seff,
        partition_sizes=tuple(sizes), cross_edges=cross, total_edges=total)
