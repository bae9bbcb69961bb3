"""Explicit enumeration of the relevant search space.

The workload graph holds every state with f < f* plus the optimal goal
states, with an undirected unit edge wherever two member states are
adjacent in the state space. Partitioning this graph is what the
offline overhead model operates on.
"""

from __future__ import annotations

from dataclasses import dataclass

from hdastar.errors import BudgetExceeded, ConfigError
from hdastar.search.openlist import make_open_list

DEFAULT_NODE_BUDGET = 50_000_000


@dataclass
class WorkloadGraph:
    states: list                    # member states, index = node id
    edges: list                     # (i, j) with i < j, unique
    f_star: int
    domain_kind: str = ""
    instance: str = ""

    @property
    def n_nodes(self) -> int:
        return len(self.states)

    @property
    def n_edges(self) -> int:
        return len(self.edges)


def enumerate_workload_graph(domain, f_star: int,
                             node_budget: int = DEFAULT_NODE_BUDGET) -> WorkloadGraph:
    """Dijkstra sweep over all states with f <= f*, filtered to members.

    `f_star` must be the optimal cost (as returned by astar_solve);
    goal states enter the graph only at g = f*.
    """
    start = domain.initial_state()
    heuristic = domain.heuristic
    if heuristic(start) > f_star:
        raise ConfigError("f_star below the start state's f value")
    open_list = make_open_list("heap", "FIFO")
    best_g = {start: 0}
    settled: dict = {}
    open_list.push(0, 0, start)  # ordered by g
    while len(open_list):
        g, _, state = open_list.pop()
        if state in settled or best_g.get(state) != g:
            continue
        settled[state] = g
        if len(settled) > node_budget:
            raise BudgetExceeded(f"workload enumeration exceeded {node_budget} nodes")
        if domain.is_goal(state):
            continue  # nothing beyond a goal is relevant
        for succ, cost in domain.successors(state):
            gs = g + cost
            if gs + heuristic(succ) > f_star:
                continue
            known = best_g.get(succ)
            if known is not None and known <= gs:
                continue
            best_g[succ] = gs
            open_list.push(gs, gs, succ)

    def member(state) -> bool:
        g = settled[state]
        if g + heuristic(state) < f_star:
            return True
        return domain.is_goal(state) and g <= f_star

    states = [s for s in settled if member(s)]
    states.sort(key=domain.state_key)
    index = {s: i for i, s in enumerate(states)}
    edges = set()
    for s in states:
        i = index[s]
        for succ, _cost in domain.successors(s):
            j = index.get(succ)
            if j is not None and j != i:
                edges.add((i, j) if i < j else (j, i))
    return WorkloadGraph(states, sorted(edges), f_star,
                         domain_kind=domain.kind, instance=domain.instance_id())


def save_workload_graph(wg: WorkloadGraph, domain, path):
    with open(path, "w") as fh:
        fh.write(f"wg {wg.n_nodes} {wg.n_edges} {wg.f_star} {domain.kind} {wg.instance}\n")
        for state in wg.states:
            fh.write(domain.state_key(state) + "\n")
        for i, j in wg.edges:
            fh.write(f"e {i} {j}\n")


def load_workload_graph(path, domain) -> WorkloadGraph:
    with open(path) as fh:
        header = fh.readline().split()
        if len(header) < 5 or header[0] != "wg":
            raise ConfigError("workload file: bad header")
        n, m, f_star = int(header[1]), int(header[2]), int(header[3])
        kind = header[4]
        instance = header[5] if len(header) > 5 else ""
        if kind != domain.kind:
            raise ConfigError(
                f"workload file is for domain kind {kind!r}, got {domain.kind!r}")
        states = [domain.parse_state_key(fh.readline().strip()) for _ in range(n)]
        edges = []
        for _ in range(m):
            parts = fh.readline().split()
            if len(parts) != 3 or parts[0] != "e":
                raise ConfigError("workload file: bad edge line")
            edges.append((int(parts[1]), int(parts[2])))
    return WorkloadGraph(states, edges, f_star, kind, instance)
