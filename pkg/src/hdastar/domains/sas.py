"""Minimal SAS+-style planning tasks.

Line-oriented text format:

    var <name> <k>          # k values, named 0..k-1
    op <name> <cost>
      pre <var> <val|*>     # * = applicable for any current value
      post <var> <val>
    end
    init <var> <val>        # one per variable
    goal <var> <val>        # one per goal variable

Each variable carries a domain transition graph: vertices are its
values, an undirected edge (v, v') exists iff some operator moves the
variable between v and v', and the edge weight is the number of
operators inducing that transition divided by the total number of
operators affecting the variable.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from fractions import Fraction

from hdastar.errors import ConfigError
from hdastar.domains.base import Domain

ANY = -1


@dataclass(frozen=True)
class Operator:
    name: str
    cost: int
    pres: tuple[tuple[int, int], ...]   # (var_index, required value or ANY)
    posts: tuple[tuple[int, int], ...]  # (var_index, new value)

    def changes(self, var: int) -> bool:
        """True if applying this operator can change `var`."""
        pre = dict(self.pres).get(var, ANY)
        for v, val in self.posts:
            if v == var and (pre == ANY or pre != val):
                return True
        return False


@dataclass
class SasTask:
    variables: list[str]
    domains: list[int]                      # value count per variable
    operators: list[Operator]
    init: tuple[int, ...]
    goal: tuple[tuple[int, int], ...]       # (var_index, value) pairs
    var_index: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.var_index:
            self.var_index = {name: i for i, name in enumerate(self.variables)}

    @property
    def n_features(self) -> int:
        return sum(self.domains)

    def digest(self) -> str:
        h = hashlib.sha256()
        h.update(repr((self.variables, self.domains, self.init, self.goal)).encode())
        for op in self.operators:
            h.update(repr((op.name, op.cost, op.pres, op.posts)).encode())
        return h.hexdigest()[:12]


@dataclass
class DomainTransitionGraph:
    var: int
    n_values: int
    # (u, v) with u < v  ->  number of inducing (operator, source value) pairs
    edge_ops: dict
    affecting_ops: int  # operators that can change the variable
    weight_denom: int   # total transition count; equals affecting_ops when
                        # every affecting operator has a defined pre value

    @property
    def edges(self) -> list[tuple[int, int]]:
        return sorted(self.edge_ops)

    def weight(self, u: int, v: int) -> Fraction:
        if u > v:
            u, v = v, u
        return Fraction(self.edge_ops[(u, v)], self.weight_denom)

    def weights(self) -> dict:
        return {e: Fraction(k, self.weight_denom) for e, k in self.edge_ops.items()}

    def degree(self, v: int) -> int:
        return sum(1 for (a, b) in self.edge_ops if a == v or b == v)


def parse_sas(text: str) -> SasTask:
    """Parse the mini-format; errors carry 1-based line numbers."""
    variables: list[str] = []
    domains: list[int] = []
    var_index: dict[str, int] = {}
    operators: list[Operator] = []
    init: dict[int, int] = {}
    goal: dict[int, int] = {}

    lines = text.splitlines()
    i = 0

    def fail(lineno: int, msg: str):
        raise ConfigError(f"line {lineno}: {msg}")

    def lookup(lineno: int, name: str) -> int:
        if name not in var_index:
            fail(lineno, f"unknown variable {name!r}")
        return var_index[name]

    def check_value(lineno: int, var: int, val: int):
        if not 0 <= val < domains[var]:
            fail(lineno, f"value {val} out of domain for variable {variables[var]!r}")

    while i < len(lines):
        lineno = i + 1
        parts = lines[i].split()
        i += 1
        if not parts or parts[0].startswith("#"):
            continue
        head = parts[0]
        if head == "var":
            if len(parts) != 3:
                fail(lineno, "expected 'var <name> <k>'")
            name, k = parts[1], parts[2]
            if name in var_index:
                fail(lineno, f"duplicate variable name {name!r}")
            try:
                size = int(k)
            except ValueError:
                fail(lineno, f"bad domain size {k!r}")
            if size < 1:
                fail(lineno, "variable domain must have at least one value")
            var_index[name] = len(variables)
            variables.append(name)
            domains.append(size)
        elif head == "op":
            if len(parts) != 3:
                fail(lineno, "expected 'op <name> <cost>'")
            op_name = parts[1]
            try:
                cost = int(parts[2])
            except ValueError:
                fail(lineno, f"bad cost {parts[2]!r}")
            if cost < 0:
                fail(lineno, "operator cost must be nonnegative")
            pres: list[tuple[int, int]] = []
            posts: list[tuple[int, int]] = []
            closed = False
            while i < len(lines):
                lineno = i + 1
                body = lines[i].split()
                i += 1
                if not body or body[0].startswith("#"):
                    continue
                if body[0] == "end":
                    closed = True
                    break
                if body[0] not in ("pre", "post") or len(body) != 3:
                    fail(lineno, "expected 'pre <var> <val|*>', 'post <var> <val>' or 'end'")
                var = lookup(lineno, body[1])
                if body[0] == "pre":
                    if body[2] == "*":
                        val = ANY
                    else:
                        val = _int(lineno, body[2], fail)
                        check_value(lineno, var, val)
                    pres.append((var, val))
                else:
                    val = _int(lineno, body[2], fail)
                    check_value(lineno, var, val)
                    posts.append((var, val))
            if not closed:
                fail(lineno, f"operator {op_name!r} not terminated by 'end'")
            operators.append(Operator(op_name, cost, tuple(pres), tuple(posts)))
        elif head == "init":
            if len(parts) != 3:
                fail(lineno, "expected 'init <var> <val>'")
            var = lookup(lineno, parts[1])
            val = _int(lineno, parts[2], fail)
            check_value(lineno, var, val)
            init[var] = val
        elif head == "goal":
            if len(parts) != 3:
                fail(lineno, "expected 'goal <var> <val>'")
            var = lookup(lineno, parts[1])
            val = _int(lineno, parts[2], fail)
            check_value(lineno, var, val)
            goal[var] = val
        else:
            fail(lineno, f"unknown directive {head!r}")

    missing = [variables[v] for v in range(len(variables)) if v not in init]
    if missing:
        raise ConfigError(f"missing init for variable(s): {', '.join(missing)}")
    init_tuple = tuple(init[v] for v in range(len(variables)))
    goal_tuple = tuple(sorted(goal.items()))
    return SasTask(variables, domains, operators, init_tuple, goal_tuple)


def _int(lineno, token, fail):
    try:
        return int(token)
    except ValueError:
        fail(lineno, f"bad integer {token!r}")


def format_sas(task: SasTask) -> str:
    out = []
    for name, k in zip(task.variables, task.domains):
        out.append(f"var {name} {k}")
    for op in task.operators:
        out.append(f"op {op.name} {op.cost}")
        for var, val in op.pres:
            out.append(f"  pre {task.variables[var]} {'*' if val == ANY else val}")
        for var, val in op.posts:
            out.append(f"  post {task.variables[var]} {val}")
        out.append("end")
    for var, val in enumerate(task.init):
        out.append(f"init {task.variables[var]} {val}")
    for var, val in task.goal:
        out.append(f"goal {task.variables[var]} {val}")
    return "\n".join(out) + "\n"


def extract_dtg(task: SasTask, var: int) -> DomainTransitionGraph:
    """Build the domain transition graph of one variable.

    An operator with a defined precondition value contributes one count
    to the (pre, post) edge. An operator with an unspecified ('any')
    precondition induces the transition from every other value to its
    post value; each (source value, operator) pair is counted once, in
    the edge count and in the weight denominator alike, so edge weights
    always sum to at most 1.
    """
    if not 0 <= var < len(task.variables):
        raise ConfigError(f"no such variable index: {var}")
    n = task.domains[var]
    edge_ops: dict[tuple[int, int], int] = {}
    affecting = 0
    denom = 0
    for op in task.operators:
        if not op.changes(var):
            continue
        affecting += 1
        pre = dict(op.pres).get(var, ANY)
        post = dict(op.posts)[var]
        if pre == ANY:
            sources = [v for v in range(n) if v != post]
        else:
            sources = [pre]
        for src in sources:
            edge = (src, post) if src < post else (post, src)
            edge_ops[edge] = edge_ops.get(edge, 0) + 1
            denom += 1
    return DomainTransitionGraph(var, n, edge_ops, affecting, denom)


class SasPlanningDomain(Domain):
    """Search-facing adapter around a SasTask.

    The default heuristic is blind (h = 0). The goal-count heuristic is
    available only when every operator writes at most one goal variable,
    which makes it admissible for integer costs >= 1; the constructor
    verifies this statically instead of trusting the caller.
    """

    kind = "sas"

    def __init__(self, task: SasTask, heuristic: str = "blind"):
        self.task = task
        self.n_vars = len(task.variables)
        if heuristic not in ("blind", "goalcount"):
            raise ConfigError(f"unknown SAS heuristic {heuristic!r}")
        if heuristic == "goalcount":
            goal_vars = {v for v, _ in task.goal}
            for op in task.operators:
                touched = sum(1 for v, _ in op.posts if v in goal_vars and op.changes(v))
                if touched > 1:
                    raise ConfigError(
                        f"goal-count heuristic requires single-goal-effect operators; "
                        f"{op.name!r} writes {touched} goal variables")
                if op.cost < 1 and touched:
                    raise ConfigError(
                        f"goal-count heuristic requires cost >= 1 on goal-changing "
                        f"operators; {op.name!r} has cost {op.cost}")
        self.heuristic_name = heuristic
        self._goal = task.goal

    def initial_state(self):
        return self.task.init

    def is_goal(self, state) -> bool:
        return all(state[v] == val for v, val in self._goal)

    def successors(self, state):
        for op in self.task.operators:
            applicable = True
            for var, val in op.pres:
                if val != ANY and state[var] != val:
                    applicable = False
                    break
            if not applicable:
                continue
            nxt = list(state)
            changed = False
            for var, val in op.posts:
                if nxt[var] != val:
                    nxt[var] = val
                    changed = True
            if changed:
                yield tuple(nxt), op.cost

    def heuristic(self, state) -> int:
        if self.heuristic_name == "blind":
            return 0
        return sum(1 for v, val in self._goal if state[v] != val)

    def features(self, state):
        return list(enumerate(state))

    def all_features(self):
        return [(var, val) for var in range(self.n_vars) for val in range(self.task.domains[var])]

    def state_key(self, state) -> str:
        return ",".join(str(v) for v in state)

    def parse_state_key(self, key: str):
        return tuple(int(t) for t in key.split(","))

    def instance_id(self) -> str:
        return self.task.digest()
