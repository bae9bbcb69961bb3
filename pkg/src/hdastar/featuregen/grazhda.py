"""Compose per-variable DTG partitions into a feature projection.

Every variable's transition graph is split into two abstract features;
a state's abstract feature vector records, per variable, which side its
value sits on. Variables excluded by filtering (or too small to split)
collapse to a single abstract feature, whose hash word is constant and
thus never moves a state between owners.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

from hdastar.domains.sas import SasTask, extract_dtg
from hdastar.featuregen.dtg_partition import (
    SPARSITY,
    DtgPartition,
    WeightedGraph,
    greedy_afg,
    partition_dtg_bb,
)
from hdastar.featuregen.fluency import fluency_filter
from hdastar.hashing.projection import FeatureProjection


@dataclass
class VariablePartitionReport:
    var: int
    name: str
    n_values: int
    sizes: tuple
    cut_edges: int
    cut_weight: float
    objective: str
    value: float
    fell_back: bool = False


@dataclass
class ProjectionResult:
    projection: FeatureProjection
    reports: list = field(default_factory=list)
    partitions: dict = field(default_factory=dict)  # var -> DtgPartition


def _compose(task: SasTask, partitions: dict, kept: set, name: str) -> ProjectionResult:
    mapping = {}
    reports = []
    for var in range(len(task.variables)):
        n = task.domains[var]
        part = partitions.get(var)
        if var not in kept or part is None:
            for val in range(n):
                mapping[(var, val)] = (var, 0)
            continue
        for val in range(n):
            mapping[(var, val)] = (var, part.side[val])
        value = part.sparsity() if part.method.endswith(SPARSITY) or part.method == "greedy" \
            else part.co_lb()
        reports.append(VariablePartitionReport(
            var=var,
            name=task.variables[var],
            n_values=n,
            sizes=part.sizes,
            cut_edges=len(part.cut_edges()),
            cut_weight=float(part.cut_weight()),
            objective=part.method,
            value=float(value) if value != float("inf") else float("inf"),
        ))
    return ProjectionResult(FeatureProjection(mapping, name), reports, partitions)


def grazhda_projection(task: SasTask, objective: str = SPARSITY,
                       fluency_fraction: float = 0.0,
                       vertex_cap: int = 25) -> ProjectionResult:
    """Partition every DTG with the exact objective-driven partitioner.

    Variables with a single value, or dropped by the optional fluency
    filter, become constant abstract features. DTGs larger than
    `vertex_cap` fall back to the greedy bisection with a warning.
    """
    kept = set(fluency_filter(task, fluency_fraction)) if fluency_fraction > 0 \
        else set(range(len(task.variables)))
    partitions: dict[int, DtgPartition] = {}
    fell_back_vars = []
    for var in sorted(kept):
        n = task.domains[var]
        if n < 2:
            continue
        graph = WeightedGraph.from_dtg(extract_dtg(task, var))
        part, fell_back = partition_dtg_bb(graph, objective, vertex_cap)
        if fell_back:
            fell_back_vars.append(task.variables[var])
        partitions[var] = part
    if fell_back_vars:
        warnings.warn(
            f"DTG vertex cap {vertex_cap} exceeded for {fell_back_vars}; "
            f"used greedy bisection there", stacklevel=2)
    name = f"dtg-{objective}"
    if fluency_fraction > 0:
        name += f"-fluency{fluency_fraction:g}"
    result = _compose(task, partitions, kept, name)
    for report, var in zip(result.reports, sorted(v for v in partitions)):
        report.fell_back = task.variables[var] in fell_back_vars
    return result


def greedy_projection(task: SasTask, fluency_fraction: float = 0.0) -> ProjectionResult:
    """Greedy balanced bisection of every DTG (no explicit objective)."""
    kept = set(fluency_filter(task, fluency_fraction)) if fluency_fraction > 0 \
        else set(range(len(task.variables)))
    partitions = {}
    for var in sorted(kept):
        if task.domains[var] < 2:
            continue
        graph = WeightedGraph.from_dtg(extract_dtg(task, var))
        partitions[var] = greedy_afg(graph)
    name = "dtg-greedy"
    if fluency_fraction > 0:
        name += f"-fluency{fluency_fraction:g}"
    return _compose(task, partitions, kept, name)
