"""Fluency: how often a variable changes, and filtering on it.

A variable every operator rewrites makes any projection built on the
other variables useless, because each move flips its abstract feature
and therefore the state's hash. Filtering the most fluent variables
before projecting restores locality at some cost in balance.
"""

from __future__ import annotations

from fractions import Fraction

from hdastar.errors import ConfigError
from hdastar.domains.sas import SasTask


def fluency(task: SasTask, var: int) -> Fraction:
    """Fraction of operators that change `var`."""
    if not task.operators:
        raise ConfigError("fluency undefined for a task with no operators")
    if not 0 <= var < len(task.variables):
        raise ConfigError(f"no such variable index: {var}")
    changing = sum(1 for op in task.operators if op.changes(var))
    return Fraction(changing, len(task.operators))


def fluency_filter(task: SasTask, fraction: float = 0.30) -> list[int]:
    """Variable indices that survive dropping the most fluent ones.

    Drops floor(fraction * #vars) variables of highest fluency; the sort
    is stable, so among equal fluencies the lowest-indexed variable is
    dropped first.
    """
    if not 0 <= fraction < 1:
        raise ConfigError("fraction must be in [0, 1)")
    n = len(task.variables)
    drop = int(fraction * n)
    if drop == 0:
        return list(range(n))
    ranked = sorted(range(n), key=lambda v: -fluency(task, v))
    dropped = set(ranked[:drop])
    return [v for v in range(n) if v not in dropped]
