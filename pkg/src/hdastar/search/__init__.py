from hdastar.search.astar import Solution, astar_solve
from hdastar.search.openlist import BucketOpenList, HeapOpenList, make_open_list
from hdastar.search.workload import WorkloadGraph, enumerate_workload_graph

__all__ = [
    "BucketOpenList",
    "HeapOpenList",
    "Solution",
    "WorkloadGraph",
    "astar_solve",
    "enumerate_workload_graph",
    "make_open_list",
]
