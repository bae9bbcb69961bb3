"""Sequential A* with expansion-order instrumentation.

The reference implementation everything else is checked against: exact
costs, the canonical expansion ordering for a given tie-break policy,
and optionally the continued sweep past the first solution that covers
every state with f <= f* (the reference ordering used when comparing
parallel runs).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from hdastar.errors import BudgetExceeded, Unsolvable
from hdastar.search.openlist import LIFO, make_open_list
from hdastar.trace import ExpansionTrace

DEFAULT_NODE_BUDGET = 50_000_000


@dataclass
class Solution:
    cost: int
    path: list
    expansions: int
    generated: int
    max_open: int
    f_star: int
    trace: ExpansionTrace | None = None
    walltime_ms: float | None = None
    closed_g: dict = field(default_factory=dict, repr=False)


def astar_solve(domain, tiebreak: str = LIFO, backend: str = "bucket",
                continue_past_goal: bool = False, record_trace: bool = False,
                node_budget: int = DEFAULT_NODE_BUDGET) -> Solution:
    """Optimal A* search.

    With `continue_past_goal` the search keeps expanding until the
    minimum open f exceeds the optimal cost, so the trace assigns an
    ordinal to every state with f <= f*. Goal states are expanded
    (traced) but never generate successors.

    Raises Unsolvable when the open list runs dry, BudgetExceeded when
    more than `node_budget` expansions would be needed.
    """
    t0 = time.perf_counter()
    open_list = make_open_list(backend, tiebreak)
    start = domain.initial_state()
    h0 = domain.heuristic(start)
    best_g = {start: 0}
    parent: dict = {start: None}
    closed: dict = {}
    rows: list = [] if record_trace else None
    heuristic = domain.heuristic
    is_goal = domain.is_goal

    open_list.push(h0, 0, start)
    expansions = 0
    generated = 0
    max_open = 1
    f_star = None
    goal_state = None

    while len(open_list):
        f, g, state = open_list.pop()
        if state in closed or best_g.get(state) != g:
            continue  # stale copy superseded by a better push
        if f_star is not None and f > f_star:
            break  # continued sweep complete: min open f exceeds f*
        if expansions >= node_budget:
            raise BudgetExceeded(f"expansion budget {node_budget} exceeded")
        expansions += 1
        closed[state] = g
        if rows is not None:
            rows.append((expansions, domain.state_key(state), g, f - g, f))
        if is_goal(state):
            if f_star is None:
                f_star = g
                goal_state = state
                if not continue_past_goal:
                    break
            continue  # goals are traced but not expanded further
        for succ, cost in domain.successors(state):
            generated += 1
            known = best_g.get(succ)
            gs = g + cost
            if known is not None and known <= gs:
                continue
            if succ in closed:
                del closed[succ]  # reopening; impossible for consistent h
            best_g[succ] = gs
            parent[succ] = state
            open_list.push(gs + heuristic(succ), gs, succ)
        if len(open_list) > max_open:
            max_open = len(open_list)

    if f_star is None:
        raise Unsolvable("open list exhausted without reaching a goal")

    path = []
    node = goal_state
    while node is not None:
        path.append(node)
        node = parent[node]
    path.reverse()

    trace = None
    if rows is not None:
        trace = ExpansionTrace(rows, meta={
            "tiebreak": tiebreak,
            "backend": backend,
            "instance": domain.instance_id(),
            "source": "astar",
        })
    return Solution(
        cost=f_star,
        path=path,
        expansions=expansions,
        generated=generated,
        max_open=max_open,
        f_star=f_star,
        trace=trace,
        walltime_ms=(time.perf_counter() - t0) * 1e3,
        closed_g=closed,
    )


def iddfs_optimal_cost(domain, max_depth: int = 64) -> int:
    """Brute-force iterative-deepening DFS oracle (unit or integer costs).

    Independent of the A* machinery: no heuristic, no open list. Only
    practical for shallow instances.
    """
    start = domain.initial_state()

    def bounded(state, g, bound, prev):
        if g > bound:
            return False
        if domain.is_goal(state):
            return True
        for succ, cost in domain.successors(state):
            if succ == prev:
                continue
            if bounded(succ, g + cost, bound, state):
                return True
        return False

    for bound in range(max_depth + 1):
        if bounded(start, 0, bound, None):
            return bound
    raise Unsolvable(f"no solution within depth {max_depth}")
