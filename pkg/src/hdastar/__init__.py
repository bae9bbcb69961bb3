"""Hash-distributed parallel A* workbench.

Sequential and parallel best-first search over tile, grid and SAS+ style
planning domains, a family of hash-based work-distribution strategies
(Zobrist, abstract Zobrist, perfect hash, state abstraction), automated
feature-projection generation by partitioning domain transition graphs,
and instrumentation plus an offline model for communication / search
overheads.
"""

from hdastar.errors import (
    BudgetExceeded,
    ConfigError,
    MemoryBudgetExceeded,
    TracePolicyMismatch,
    Unsolvable,
    WorkerPanic,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "ConfigError",
    "MemoryBudgetExceeded",
    "TracePolicyMismatch",
    "Unsolvable",
    "WorkerPanic",
    "__version__",
]
