"""State abstraction for SAS tasks: keep a variable subset, hash the rest away.

The greedy selection mirrors structured duplicate detection: variables
join the retained set one at a time, each chosen to minimize the
maximum out-degree of the abstract state graph, under either a cap on
the number of abstract states (static) or a budget on retained feature
count (the dynamic variant, sized as a fraction of the task's features).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

from hdastar.errors import ConfigError
from hdastar.domains.sas import ANY, SasTask


@dataclass(frozen=True)
class StateAbstraction:
    retained: tuple  # variable indices, in selection order
    n_abstract_states: int

    def project(self, state) -> tuple:
        return tuple(state[v] for v in self.retained)


def dahda_threshold(task: SasTask, fraction: float = 0.30) -> int:
    """Retained-feature budget: ceil(fraction x total feature count)."""
    if not 0 < fraction <= 1:
        raise ConfigError("fraction must be in (0, 1]")
    return math.ceil(fraction * task.n_features)


def sdd_greedy_abstraction(task: SasTask, max_abstract_nodes: int | None = None,
                           max_features: int | None = None) -> StateAbstraction:
    """Greedy variable selection minimizing abstract-graph max out-degree.

    Exactly one of the two limits bounds growth: `max_abstract_nodes`
    caps the product of retained domain sizes, `max_features` caps the
    sum of retained domain sizes. An empty selection (single abstract
    state) is legal; every state then shares one owner.
    """
    if (max_abstract_nodes is None) == (max_features is None):
        raise ConfigError("specify exactly one of max_abstract_nodes / max_features")
    if max_abstract_nodes is not None and max_abstract_nodes < 1:
        raise ConfigError("max_abstract_nodes must be >= 1")
    retained: list[int] = []
    n_states = 1
    n_feats = 0
    n_vars = len(task.variables)
    while True:
        candidates = []
        for var in range(n_vars):
            if var in retained:
                continue
            size = task.domains[var]
            if max_abstract_nodes is not None and n_states * size > max_abstract_nodes:
                continue
            if max_features is not None and n_feats + size > max_features:
                continue
            candidates.append(var)
        if not candidates:
            break
        best_var = None
        best_deg = None
        for var in candidates:
            deg = abstract_max_out_degree(task, retained + [var])
            if best_deg is None or deg < best_deg:
                best_var, best_deg = var, deg
        retained.append(best_var)
        n_states *= task.domains[best_var]
        n_feats += task.domains[best_var]
    return StateAbstraction(tuple(retained), n_states)


def abstract_max_out_degree(task: SasTask, variables) -> int:
    """Max out-degree over the abstract graph spanned by `variables`.

    Abstract nodes are assignments to the chosen variables; an arc
    u -> v exists when some operator compatible with u rewrites it to a
    different assignment v.
    """
    variables = list(variables)
    if not variables:
        return 0
    # precompute per-operator (pre constraints, post writes) on these variables
    op_views = []
    for op in task.operators:
        pres = dict(op.pres)
        posts = dict(op.posts)
        rel_pre = {}
        rel_post = {}
        for i, var in enumerate(variables):
            if var in pres and pres[var] != ANY:
                rel_pre[i] = pres[var]
            if var in posts:
                rel_post[i] = posts[var]
        if rel_post:
            op_views.append((rel_pre, rel_post))
    best = 0
    for node in product(*(range(task.domains[v]) for v in variables)):
        succs = set()
        for rel_pre, rel_post in op_views:
            if any(node[i] != val for i, val in rel_pre.items()):
                continue
            nxt = list(node)
            for i, val in rel_post.items():
                nxt[i] = val
            nxt = tuple(nxt)
            if nxt != node:
                succs.add(nxt)
        if len(succs) > best:
            best = len(succs)
    return best
