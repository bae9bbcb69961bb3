"""Exception types shared across the package."""


class HdastarError(Exception):
    """Base class for all package errors."""


class ConfigError(HdastarError):
    """Invalid configuration (unknown strategy, bad parameter, parse error)."""


class Unsolvable(HdastarError):
    """The open list was exhausted without reaching a goal."""


class BudgetExceeded(HdastarError):
    """A node or expansion budget was exceeded before the search finished."""


class MemoryBudgetExceeded(HdastarError):
    """A worker exceeded its stored-node budget.

    Carries the partial run report so the outcome is reportable rather
    than a bare crash.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class WorkerPanic(HdastarError):
    """A worker thread raised; the run was aborted."""

    def __init__(self, message, worker_id=None, cause=None):
        super().__init__(message)
        self.worker_id = worker_id
        self.cause = cause


class TracePolicyMismatch(HdastarError):
    """Two expansion traces were recorded under different policies."""
