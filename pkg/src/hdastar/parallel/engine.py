"""Hash-distributed parallel A*.

p workers, each with a private open/closed list. Generated nodes are
hashed to an owner; foreign nodes travel in fixed-size batches through
per-worker mailboxes, local ones short-circuit. A shared incumbent
bounds expansion (nodes with f >= U are never expanded), which keeps
the returned cost optimal while letting workers go quiet.

Termination is a two-phase counting snapshot: the coordinator requires
every worker idle, every mailbox quiet, total sent == total received,
and every published open minimum >= the incumbent; a second sweep must
observe identical per-worker activity counters before the stop flag is
raised. With one worker the engine runs inline on the calling thread
and touches no synchronization in the expansion path.
"""

from __future__ import annotations

import itertools
import sys
import threading
import time
from dataclasses import dataclass, field

from hdastar.errors import BudgetExceeded, MemoryBudgetExceeded, Unsolvable, WorkerPanic
from hdastar.parallel.mailbox import Mailbox
from hdastar.search.astar import DEFAULT_NODE_BUDGET
from hdastar.search.openlist import LIFO, make_open_list
from hdastar.trace import ExpansionTrace

INF = float("inf")

DEFAULT_BATCH = 100
FLUSH_TIMEOUT = 0.001   # seconds of sender idleness before partial batches go out
IDLE_SLEEP = 0.0002
POLL_INTERVAL = 0.0005
DEFAULT_TRACE_BUDGET = 4_000_000


@dataclass
class WorkerStats:
    expanded: int = 0
    generated: int = 0
    sent: int = 0
    received: int = 0
    inserted: int = 0
    duplicates: int = 0
    pruned: int = 0
    reexpanded: int = 0
    max_open: int = 0


@dataclass
class RunReport:
    strategy: str
    p: int
    seed: int
    batch_size: int
    cost: int | None
    expansions: list
    generated: list
    sent: list
    received: list
    duplicates: list
    reexpanded: list
    pruned: list
    max_open: list
    co: float
    so: float | None
    lb: float
    walltime_ms: float | None
    terminated_reason: str
    seq_expansions: int | None = None
    seq_walltime_ms: float | None = None
    speedup_vs_astar: float | None = None
    speedup_vs_engine_p1: float | None = None
    efficiency: float | None = None
    tiebreak: str = LIFO
    backend: str = "bucket"
    instance: str = ""
    trace_truncated: bool = False

    @property
    def total_expanded(self) -> int:
        return sum(self.expansions)

    def to_dict(self) -> dict:
        return {k: getattr(self, k) for k in (
            "strategy", "p", "seed", "batch_size", "cost", "expansions",
            "generated", "sent", "received", "duplicates", "reexpanded",
            "pruned", "max_open", "co", "so", "lb", "walltime_ms",
            "terminated_reason", "seq_expansions", "seq_walltime_ms",
            "speedup_vs_astar", "speedup_vs_engine_p1", "efficiency",
            "tiebreak", "backend", "instance", "trace_truncated")}


@dataclass
class HdaResult:
    cost: int
    path: list
    report: RunReport
    trace: ExpansionTrace | None = None


class _Shared:
    """State visible to all workers plus the coordinator."""

    def __init__(self, domain, strategy, p, config):
        self.domain = domain
        self.strategy = strategy
        self.p = p
        self.config = config
        self.mailboxes = [Mailbox(config.get("delay_fn")) for _ in range(p)]
        self.ordinal = itertools.count(1)
        self.incumbent_lock = threading.Lock()
        self.incumbent_cost = INF
        self.incumbent_goal = None
        self.stop = False
        self.abort_reason: str | None = None
        self.abort_detail = None
        self.node_budget = config.get("node_budget", DEFAULT_NODE_BUDGET)
        self.memory_budget = config.get("memory_budget")
        self.record_trace = config.get("record_trace", False)
        self.trace_budget = config.get("trace_budget", DEFAULT_TRACE_BUDGET)

    def offer_incumbent(self, cost, goal_state) -> None:
        with self.incumbent_lock:
            if cost < self.incumbent_cost:
                self.incumbent_cost = cost
                self.incumbent_goal = goal_state

    def abort(self, reason: str, detail=None) -> None:
        # first abort wins; later ones are consequences
        if self.abort_reason is None:
            self.abort_reason = reason
            self.abort_detail = detail
        self.stop = True


class _Worker:
    def __init__(self, shared: _Shared, wid: int, tiebreak: str, backend: str):
        self.shared = shared
        self.wid = wid
        self.open = make_open_list(backend, tiebreak)
        self.best_g: dict = {}
        self.closed: dict = {}
        self.parent: dict = {}
        self.stats = WorkerStats()
        self.outboxes: list[list | None] = [
            [] if i != wid else None for i in range(shared.p)]
        self.pending = 0
        self.last_flush = time.monotonic()
        self.trace_rows: list = []
        self.trace_full = False
        # coordinator-visible fields
        self.idle = False
        self.activity = 0
        self.published_min_f = None
        self.thread: threading.Thread | None = None

    # -- node disposition ------------------------------------------------

    def seed_root(self, state) -> None:
        h = self.shared.domain.heuristic(state)
        self.best_g[state] = 0
        self.parent[state] = None
        self.open.push(h, 0, state)

    def dispose(self, state, g, parent_state) -> None:
        """Insert, drop as duplicate, or prune one incoming node."""
        stats = self.stats
        known = self.best_g.get(state)
        if known is not None and known <= g:
            stats.duplicates += 1
            return
        h = self.shared.domain.heuristic(state)
        if g + h >= self.shared.incumbent_cost:
            stats.pruned += 1
            return
        self.best_g[state] = g
        self.parent[state] = parent_state
        self.open.push(g + h, g, state)
        stats.inserted += 1
        if len(self.open) > stats.max_open:
            stats.max_open = len(self.open)
        mem = self.shared.memory_budget
        if mem is not None and len(self.best_g) > mem:
            self.shared.abort("memory", self.wid)

    def drain_mailbox(self) -> bool:
        nodes = self.shared.mailboxes[self.wid].drain()
        if not nodes:
            return False
        self.stats.received += len(nodes)
        self.activity += 1
        for state, g, parent_state in nodes:
            self.dispose(state, g, parent_state)
        return True

    # -- sending ----------------------------------------------------------

    def send(self, owner: int, state, g, parent_state) -> None:
        box = self.outboxes[owner]
        box.append((state, g, parent_state))
        self.pending += 1
        if len(box) >= self.shared.config.get("batch_size", DEFAULT_BATCH):
            self.flush_one(owner)

    def flush_one(self, owner: int) -> None:
        box = self.outboxes[owner]
        if box:
            self.stats.sent += len(box)
            self.pending -= len(box)
            self.shared.mailboxes[owner].enqueue(box)
            self.outboxes[owner] = []
            self.activity += 1
            self.last_flush = time.monotonic()

    def flush_all(self) -> None:
        for owner in range(self.shared.p):
            if owner != self.wid:
                self.flush_one(owner)

    # -- expansion ---------------------------------------------------------

    def pop_useful(self):
        """Next valid entry with f below the incumbent, else None."""
        bound = self.shared.incumbent_cost
        open_list = self.open
        best_g = self.best_g
        closed = self.closed
        while True:
            f = open_list.peek_f()
            if f is None or f >= bound:
                return None
            f, g, state = open_list.pop()
            if best_g.get(state) != g:
                continue  # superseded by a better path
            if state in closed and closed[state] <= g:
                continue  # already expanded at least this cheaply
            return f, g, state

    def expand_one(self) -> bool:
        shared = self.shared
        entry = self.pop_useful()
        if entry is None:
            return False
        f, g, state = entry
        ordinal = next(shared.ordinal)
        if ordinal > shared.node_budget:
            shared.abort("budget")
            return False
        stats = self.stats
        stats.expanded += 1
        if state in self.closed:
            stats.reexpanded += 1
        self.closed[state] = g
        if shared.record_trace and not self.trace_full:
            if len(self.trace_rows) * shared.p >= shared.trace_budget:
                self.trace_full = True
            else:
                self.trace_rows.append((ordinal, state, g, f - g, f))
        self.activity += 1
        domain = shared.domain
        if domain.is_goal(state):
            shared.offer_incumbent(g, state)
            return True
        strategy = shared.strategy
        wid = self.wid
        for succ, cost in domain.successors(state):
            stats.generated += 1
            owner = strategy.owner(succ)
            if owner == wid:
                self.dispose(succ, g + cost, state)
            else:
                self.send(owner, succ, g + cost, state)
        return True

    # -- loops --------------------------------------------------------------

    def run_inline(self) -> None:
        """Single-worker mode: no mailboxes, no flags, no sleeping."""
        shared = self.shared
        while not shared.stop and self.expand_one():
            pass
        if shared.abort_reason is None and shared.incumbent_cost is INF:
            shared.abort("unsolvable")

    def run(self) -> None:
        shared = self.shared
        try:
            while not shared.stop:
                got_mail = self.drain_mailbox()
                if got_mail:
                    self.idle = False
                worked = self.expand_one()
                if worked:
                    self.idle = False
                    if (self.pending
                            and time.monotonic() - self.last_flush > FLUSH_TIMEOUT):
                        self.flush_all()
                    continue
                # nothing expandable: push out partial batches, then park
                if self.pending:
                    self.flush_all()
                self.published_min_f = self.open.peek_f()
                self.idle = True
                time.sleep(IDLE_SLEEP)
        except Exception as exc:  # noqa: BLE001 - worker failures become diagnostics
            shared.abort("panic", (self.wid, exc))
            self.idle = True


def hda_solve(domain, strategy, p: int | None = None, batch_size: int = DEFAULT_BATCH,
              tiebreak: str = LIFO, backend: str = "bucket",
              record_trace: bool = False, node_budget: int = DEFAULT_NODE_BUDGET,
              memory_budget: int | None = None, seq_baseline=None,
              p1_walltime_ms: float | None = None, delay_fn=None,
              trace_budget: int = DEFAULT_TRACE_BUDGET) -> HdaResult:
    """Run parallel A* and measure its overheads.

    `seq_baseline` is a search-core Solution used for the search-overhead
    ratio and the speedup; pass the same tie-break and backend for the
    comparison to mean anything. Raises Unsolvable, BudgetExceeded,
    MemoryBudgetExceeded or WorkerPanic; the memory case carries the
    partial report.
    """
    if p is None:
        p = strategy.p
    if p != strategy.p:
        raise ValueError(f"strategy was built for p={strategy.p}, got p={p}")
    config = {
        "batch_size": batch_size,
        "node_budget": node_budget,
        "memory_budget": memory_budget,
        "record_trace": record_trace,
        "trace_budget": trace_budget,
        "delay_fn": delay_fn,
    }
    shared = _Shared(domain, strategy, p, config)
    workers = [_Worker(shared, i, tiebreak, backend) for i in range(p)]
    root = domain.initial_state()
    workers[strategy.owner(root)].seed_root(root)

    t0 = time.perf_counter()
    if p == 1:
        workers[0].run_inline()
        reason = shared.abort_reason or "optimal"
    else:
        old_interval = sys.getswitchinterval()
        sys.setswitchinterval(0.001)
        try:
            for w in workers:
                w.thread = threading.Thread(target=w.run, name=f"hda-w{w.wid}", daemon=True)
                w.thread.start()
            reason = _coordinate(shared, workers)
            for w in workers:
                w.thread.join()
        finally:
            sys.setswitchinterval(old_interval)
    walltime_ms = (time.perf_counter() - t0) * 1e3

    if reason == "panic":
        wid, exc = shared.abort_detail
        raise WorkerPanic(f"worker {wid} failed: {exc!r}", worker_id=wid, cause=exc)
    if reason == "budget":
        raise BudgetExceeded(f"expansion budget {node_budget} exceeded")

    report = _build_report(shared, workers, reason, walltime_ms,
                           tiebreak, backend, seq_baseline, p1_walltime_ms)
    if reason == "memory":
        raise MemoryBudgetExceeded(
            f"worker {shared.abort_detail} exceeded {memory_budget} stored nodes",
            report=report)
    if reason == "unsolvable":
        raise Unsolvable("all open lists empty with no incumbent")

    path = _reconstruct_path(shared, workers)
    trace = _merge_traces(shared, workers, tiebreak, backend) if record_trace else None
    if trace is not None:
        report.trace_truncated = trace.truncated
    return HdaResult(cost=int(shared.incumbent_cost), path=path, report=report,
                     trace=trace)


def _coordinate(shared: _Shared, workers) -> str:
    """Two-phase quiescence detection; returns the termination reason."""

    def quiescent() -> bool:
        bound = shared.incumbent_cost
        for w in workers:
            if not w.idle:
                return False
            mf = w.published_min_f
            if mf is not None and mf < bound:
                return False
        for mb in shared.mailboxes:
            if not mb.quiet():
                return False
        sent = sum(w.stats.sent for w in workers)
        received = sum(w.stats.received for w in workers)
        return sent == received

    while True:
        if shared.stop:
            return shared.abort_reason or "optimal"
        if quiescent():
            marks = [w.activity for w in workers]
            time.sleep(POLL_INTERVAL)
            if (not shared.stop and quiescent()
                    and marks == [w.activity for w in workers]):
                shared.stop = True
                return "optimal" if shared.incumbent_cost is not INF else "unsolvable"
            continue
        time.sleep(POLL_INTERVAL)


def _reconstruct_path(shared: _Shared, workers) -> list:
    goal = shared.incumbent_goal
    parents: dict = {}
    for w in workers:
        parents.update(w.parent)
    path = [goal]
    node = parents.get(goal)
    while node is not None:
        path.append(node)
        node = parents.get(node)
    path.reverse()
    return path


def _merge_traces(shared, workers, tiebreak, backend) -> ExpansionTrace:
    rows = []
    truncated = any(w.trace_full for w in workers)
    domain = shared.domain
    for w in workers:
        for ordinal, state, g, h, f in w.trace_rows:
            rows.append((ordinal, domain.state_key(state), g, h, f))
    rows.sort()
    return ExpansionTrace(rows, meta={
        "tiebreak": tiebreak,
        "backend": backend,
        "instance": domain.instance_id(),
        "source": "hda",
        "strategy": shared.strategy.name,
        "p": shared.p,
        "seed": shared.strategy.seed,
    }, truncated=truncated)


def _build_report(shared, workers, reason, walltime_ms, tiebreak, backend,
                  seq_baseline, p1_walltime_ms) -> RunReport:
    stats = [w.stats for w in workers]
    total_generated = sum(s.generated for s in stats)
    total_sent = sum(s.sent for s in stats)
    total_expanded = sum(s.expanded for s in stats)
    co = (total_sent / total_generated) if total_generated else 0.0
    expansions = [s.expanded for s in stats]
    mean = total_expanded / shared.p if total_expanded else 0.0
    lb = (max(expansions) / mean) if mean else 1.0
    so = None
    seq_expansions = None
    seq_walltime = None
    if seq_baseline is not None:
        seq_expansions = seq_baseline.expansions
        seq_walltime = seq_baseline.walltime_ms
        if seq_expansions:
            so = total_expanded / seq_expansions - 1.0
    deterministic = shared.p == 1
    wall = None if deterministic else walltime_ms
    speedup_vs_astar = None
    efficiency = None
    if not deterministic and seq_walltime and walltime_ms:
        speedup_vs_astar = seq_walltime / walltime_ms
        efficiency = speedup_vs_astar / shared.p
    speedup_vs_p1 = None
    if not deterministic and p1_walltime_ms and walltime_ms:
        speedup_vs_p1 = p1_walltime_ms / walltime_ms
    cost = None if shared.incumbent_cost is INF else int(shared.incumbent_cost)
    return RunReport(
        strategy=shared.strategy.name,
        p=shared.p,
        seed=shared.strategy.seed,
        batch_size=shared.config.get("batch_size", DEFAULT_BATCH),
        cost=cost,
        expansions=expansions,
        generated=[s.generated for s in stats],
        sent=[s.sent for s in stats],
        received=[s.received for s in stats],
        duplicates=[s.duplicates for s in stats],
        reexpanded=[s.reexpanded for s in stats],
        pruned=[s.pruned for s in stats],
        max_open=[s.max_open for s in stats],
        co=co,
        so=so,
        lb=lb,
        walltime_ms=wall,
        terminated_reason=reason,
        seq_expansions=seq_expansions,
        seq_walltime_ms=None if deterministic else seq_walltime,
        speedup_vs_astar=speedup_vs_astar,
        speedup_vs_engine_p1=speedup_vs_p1,
        efficiency=efficiency,
        tiebreak=tiebreak,
        backend=backend,
        instance=shared.domain.instance_id(),
    )
