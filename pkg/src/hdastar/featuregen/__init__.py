from hdastar.featuregen.dtg_partition import (
    DtgPartition,
    WeightedGraph,
    brute_force_partition,
    greedy_afg,
    partition_dtg_bb,
)
from hdastar.featuregen.fluency import fluency, fluency_filter
from hdastar.featuregen.grazhda import grazhda_projection, greedy_projection

__all__ = [
    "DtgPartition",
    "WeightedGraph",
    "brute_force_partition",
    "fluency",
    "fluency_filter",
    "grazhda_projection",
    "greedy_afg",
    "greedy_projection",
    "partition_dtg_bb",
]
