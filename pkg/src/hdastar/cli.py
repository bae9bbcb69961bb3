"""Command-line experiment runner.

Subcommands: solve, partition, analyze, trace-compare, bench. Outputs
are machine-readable (JSON reports, CSV tables); --gnuplot additionally
emits whitespace-separated .dat files. Every report embeds the seed and
a hash of the invocation config. Exit codes: 0 solved/ok, 1 config
error, 2 unsolvable, 3 budget exhausted.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import os
import sys
import time

from hdastar.errors import (
    BudgetExceeded,
    ConfigError,
    MemoryBudgetExceeded,
    Unsolvable,
)
from hdastar.analysis.model import model_overheads
from hdastar.analysis.metrics import divergence, premature_expansions
from hdastar.domains.grid import GridMap
from hdastar.domains.sas import SasPlanningDomain, parse_sas
from hdastar.domains.tiles import TilePuzzle
from hdastar.domains.generators import random_grid, random_tile_instance
from hdastar.featuregen.dtg_partition import OBJECTIVES
from hdastar.featuregen.grazhda import grazhda_projection, greedy_projection
from hdastar.hashing.strategies import DEFAULT_SEED, make_strategy, resolve_name
from hdastar.parallel.engine import DEFAULT_BATCH, hda_solve
from hdastar.search.astar import DEFAULT_NODE_BUDGET, astar_solve
from hdastar.search.workload import (
    enumerate_workload_graph,
    load_workload_graph,
    save_workload_graph,
)
from hdastar.trace import ExpansionTrace

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_UNSOLVABLE = 2
EXIT_BUDGET = 3


def default_seed() -> int:
    env = os.environ.get("HDASTAR_SEED")
    return int(env) if env else DEFAULT_SEED


def config_digest(payload: dict) -> str:
    canon = json.dumps(payload, sort_keys=True, default=str)
    return hashlib.sha256(canon.encode()).hexdigest()[:16]


def load_domain(args) -> object:
    kind = args.domain_type
    path = args.domain
    try:
        text = open(path).read()
    except OSError as exc:
        raise ConfigError(f"cannot read domain file {path}: {exc}") from exc
    if kind == "tiles":
        return TilePuzzle.from_text(text)
    if kind == "grid":
        return GridMap.from_text(text)
    if kind == "sas":
        heuristic = getattr(args, "sas_heuristic", "blind")
        return SasPlanningDomain(parse_sas(text), heuristic=heuristic)
    raise ConfigError(f"unknown domain type {kind!r}")


def parse_params(pairs) -> dict:
    params = {}
    for pair in pairs or []:
        if "=" not in pair:
            raise ConfigError(f"--param expects key=value, got {pair!r}")
        key, value = pair.split("=", 1)
        params[key] = value
    return params


def write_csv(path, fieldnames, rows, gnuplot=False):
    def emit(fh):
        writer = csv.DictWriter(fh, fieldnames=fieldnames)
        writer.writeheader()
        writer.writerows(rows)

    if path:
        with open(path, "w", newline="") as fh:
            emit(fh)
    else:
        emit(sys.stdout)
    if gnuplot and path:
        dat = os.path.splitext(path)[0] + ".dat"
        with open(dat, "w") as fh:
            fh.write("# " + " ".join(fieldnames) + "\n")
            for row in rows:
                fh.write(" ".join(str(row.get(k, "")) for k in fieldnames) + "\n")


# --------------------------------------------------------------------------
# solve

def cmd_solve(args) -> int:
    domain = load_domain(args)
    seed = args.seed
    config = {
        "command": "solve",
        "domain_type": args.domain_type,
        "domain": os.path.basename(args.domain),
        "strategy": args.strategy,
        "p": args.p,
        "batch": args.batch,
        "tiebreak": args.tiebreak,
        "backend": args.backend,
        "seed": seed,
        "params": sorted(parse_params(args.param).items()),
    }
    digest = config_digest(config)
    use_engine = args.engine == "hda"

    trace = None
    report: dict = {
        "schema": "hdastar-report/v1",
        "config_hash": digest,
        "seed": seed,
        "instance": domain.instance_id(),
        "domain_type": args.domain_type,
    }
    if use_engine:
        strategy = make_strategy(args.strategy, domain, args.p, seed,
                                 parse_params(args.param))
        baseline = astar_solve(domain, args.tiebreak, args.backend,
                               node_budget=args.budget)
        result = hda_solve(domain, strategy, args.p, batch_size=args.batch,
                           tiebreak=args.tiebreak, backend=args.backend,
                           record_trace=bool(args.trace),
                           node_budget=args.budget,
                           memory_budget=args.memory_budget,
                           seq_baseline=baseline)
        report.update(result.report.to_dict())
        report["kind"] = "hda"
        report["path_length"] = len(result.path)
        cost, f_star = result.cost, result.cost
        trace = result.trace
    else:
        solution = astar_solve(domain, args.tiebreak, args.backend,
                               continue_past_goal=args.continue_past_goal,
                               record_trace=bool(args.trace),
                               node_budget=args.budget)
        report.update({
            "kind": "astar",
            "cost": solution.cost,
            "expansions": solution.expansions,
            "generated": solution.generated,
            "max_open": solution.max_open,
            "path_length": len(solution.path),
            "tiebreak": args.tiebreak,
            "backend": args.backend,
            "walltime_ms": None if args.deterministic else solution.walltime_ms,
        })
        cost, f_star = solution.cost, solution.f_star
        trace = solution.trace

    if args.trace and trace is not None:
        trace.save(args.trace)
        report["trace_file"] = args.trace
    if args.emit_workload:
        wg = enumerate_workload_graph(domain, f_star, node_budget=args.budget)
        save_workload_graph(wg, domain, args.emit_workload)
        report["workload_file"] = args.emit_workload
        report["workload_nodes"] = wg.n_nodes
        report["workload_edges"] = wg.n_edges

    payload = json.dumps(report, indent=2, sort_keys=True)
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(payload + "\n")
    else:
        print(payload)
    print(f"solved: cost={cost}", file=sys.stderr)
    return EXIT_OK


# --------------------------------------------------------------------------
# partition

def cmd_partition(args) -> int:
    try:
        text = open(args.task).read()
    except OSError as exc:
        raise ConfigError(f"cannot read task file {args.task}: {exc}") from exc
    task = parse_sas(text)
    t0 = time.perf_counter()
    if args.objective == "greedy":
        result = greedy_projection(task, fluency_fraction=args.fluency)
    else:
        result = grazhda_projection(task, args.objective,
                                    fluency_fraction=args.fluency,
                                    vertex_cap=args.vertex_cap)
    elapsed = time.perf_counter() - t0
    if elapsed > 10.0:
        print(f"warning: partitioning took {elapsed:.1f}s (expected < 10s)",
              file=sys.stderr)
    if not result.reports:
        print("warning: no variable could be partitioned (empty projection)",
              file=sys.stderr)
    if args.projection:
        with open(args.projection, "w") as fh:
            fh.write(result.projection.to_json(seed=args.seed) + "\n")
    rows = [{
        "var": r.var,
        "name": r.name,
        "n_values": r.n_values,
        "size_s1": r.sizes[0],
        "size_s2": r.sizes[1],
        "cut_edges": r.cut_edges,
        "cut_weight": f"{r.cut_weight:.6g}",
        "objective": r.objective,
        "value": f"{r.value:.6g}",
        "fell_back": int(r.fell_back),
    } for r in result.reports]
    write_csv(args.report, ["var", "name", "n_values", "size_s1", "size_s2",
                            "cut_edges", "cut_weight", "objective", "value",
                            "fell_back"], rows, args.gnuplot)
    return EXIT_OK


# --------------------------------------------------------------------------
# analyze

def cmd_analyze(args) -> int:
    domain = load_domain(args)
    wg = load_workload_graph(args.wg, domain)
    rows = []
    for name in args.strategy:
        strategy = make_strategy(name, domain, args.p, args.seed,
                                 parse_params(args.param))
        rep = model_overheads(wg, strategy, args.p, c=args.c)
        row = rep.as_row()
        row = {k: (f"{v:.6g}" if isinstance(v, float) else v) for k, v in row.items()}
        rows.append(row)
    write_csv(args.out, ["strategy", "p", "c", "CO", "LB", "SO",
                         "ceff", "seff", "sceff"], rows, args.gnuplot)
    return EXIT_OK


# --------------------------------------------------------------------------
# trace-compare

def cmd_trace_compare(args) -> int:
    pairs = args.pair or []
    if not pairs:
        raise ConfigError("give at least one --pair ref.csv cand.csv")
    rows = []
    divs = []
    for ref_path, cand_path in pairs:
        ref = ExpansionTrace.load(ref_path)
        cand = ExpansionTrace.load(cand_path)
        d = divergence(ref, cand)
        divs.append(d)
        rows.append({
            "reference": ref_path,
            "candidate": cand_path,
            "divergence": f"{d:.6g}",
            "premature_ref": premature_expansions(ref),
            "premature_cand": premature_expansions(cand),
        })
    if len(rows) > 1:
        rows.append({
            "reference": "(mean)",
            "candidate": "",
            "divergence": f"{sum(divs) / len(divs):.6g}",
            "premature_ref": "",
            "premature_cand": "",
        })
    write_csv(args.out, ["reference", "candidate", "divergence",
                         "premature_ref", "premature_cand"], rows, args.gnuplot)
    return EXIT_OK


# --------------------------------------------------------------------------
# bench

def _gen_instances(args):
    spec = dict(kv.split("=", 1) for kv in args.gen.split(",")) if args.gen else {}
    n = int(spec.get("n", 5))
    seed0 = int(spec.get("seed", args.seed))
    if args.domain_type == "tiles":
        w = int(spec.get("w", 3))
        h = int(spec.get("h", 3))
        scramble = int(spec.get("scramble", 30))
        return [(f"tiles-{seed0 + i}",
                 random_tile_instance(seed0 + i, w, h, scramble)) for i in range(n)]
    if args.domain_type == "grid":
        w = int(spec.get("w", 64))
        h = int(spec.get("h", 64))
        density = float(spec.get("density", 0.45))
        return [(f"grid-{seed0 + i}",
                 random_grid(seed0 + i, w, h, density)) for i in range(n)]
    raise ConfigError("--gen supports tiles and grid domains")


def cmd_bench(args) -> int:
    if args.instances:
        domains = []
        for path in args.instances:
            fake = argparse.Namespace(domain_type=args.domain_type, domain=path,
                                      sas_heuristic=getattr(args, "sas_heuristic", "blind"))
            domains.append((os.path.basename(path), load_domain(fake)))
    else:
        domains = _gen_instances(args)
    strategies = [s.strip() for s in args.strategies.split(",") if s.strip()]
    for name in strategies:
        resolve_name(name)
    rows = []
    for label, domain in domains:
        baseline = astar_solve(domain, args.tiebreak, args.backend,
                               node_budget=args.budget)
        wg = None
        if args.with_model:
            wg = enumerate_workload_graph(domain, baseline.cost,
                                          node_budget=args.budget)
        for name in strategies:
            strategy = make_strategy(name, domain, args.p, args.seed,
                                     parse_params(args.param))
            result = hda_solve(domain, strategy, args.p, batch_size=args.batch,
                               tiebreak=args.tiebreak, backend=args.backend,
                               node_budget=args.budget,
                               seq_baseline=baseline)
            rep = result.report
            row = {
                "instance": label,
                "strategy": name,
                "p": args.p,
                "cost": result.cost,
                "expansions": rep.total_expanded,
                "CO": f"{rep.co:.4f}",
                "SO": f"{rep.so:.4f}" if rep.so is not None else "",
                "LB": f"{rep.lb:.4f}",
                "walltime_ms": f"{rep.walltime_ms:.2f}" if rep.walltime_ms else "",
                "efficiency": f"{rep.efficiency:.4f}" if rep.efficiency else "",
            }
            if wg is not None:
                model = model_overheads(wg, strategy, args.p, c=args.c)
                row["sceff"] = f"{model.sceff:.4f}"
            rows.append(row)
    fields = ["instance", "strategy", "p", "cost", "expansions", "CO", "SO",
              "LB", "walltime_ms", "efficiency"]
    if args.with_model:
        fields.append("sceff")
    write_csv(args.out, fields, rows, args.gnuplot)
    return EXIT_OK


# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hdastar",
        description="Parallel best-first search workbench: solve instances, "
                    "partition planning tasks into abstract features, and "
                    "analyze work-distribution overheads.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--seed", type=int, default=default_seed(),
                       help="hash seed (env HDASTAR_SEED overrides the default)")
        p.add_argument("--gnuplot", action="store_true",
                       help="also write a gnuplot-ready .dat next to CSV output")

    solve = sub.add_parser("solve", help="run sequential or parallel search")
    solve.add_argument("--domain-type", required=True, choices=["tiles", "grid", "sas"])
    solve.add_argument("--domain", required=True, help="instance file")
    solve.add_argument("--sas-heuristic", choices=["blind", "goalcount"], default="blind")
    solve.add_argument("--engine", choices=["hda", "seq"], default="hda")
    solve.add_argument("--strategy", default="HDA*[Z]")
    solve.add_argument("-p", type=int, default=1, help="worker count")
    solve.add_argument("--batch", type=int, default=DEFAULT_BATCH)
    solve.add_argument("--tiebreak", choices=["LIFO", "FIFO"], default="LIFO")
    solve.add_argument("--backend", choices=["bucket", "heap"], default="bucket")
    solve.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)
    solve.add_argument("--memory-budget", type=int, default=None)
    solve.add_argument("--continue-past-goal", action="store_true")
    solve.add_argument("--deterministic", action="store_true",
                       help="omit timing fields from the report")
    solve.add_argument("--param", action="append", metavar="KEY=VALUE")
    solve.add_argument("--report", help="write the JSON report here")
    solve.add_argument("--trace", help="write the expansion trace CSV here")
    solve.add_argument("--emit-workload", help="write the workload graph here")
    add_common(solve)
    solve.set_defaults(func=cmd_solve)

    part = sub.add_parser("partition", help="project a SAS task into abstract features")
    part.add_argument("--task", required=True)
    part.add_argument("--objective", choices=list(OBJECTIVES) + ["greedy"],
                      default="sparsity")
    part.add_argument("--fluency", type=float, default=0.0,
                      help="drop this fraction of the most fluent variables first")
    part.add_argument("--vertex-cap", type=int, default=25)
    part.add_argument("--projection", help="write the projection JSON here")
    part.add_argument("--report", help="write the per-DTG CSV here")
    add_common(part)
    part.set_defaults(func=cmd_partition)

    analyze = sub.add_parser("analyze", help="model overheads on a workload graph")
    analyze.add_argument("--domain-type", required=True, choices=["tiles", "grid", "sas"])
    analyze.add_argument("--domain", required=True)
    analyze.add_argument("--sas-heuristic", choices=["blind", "goalcount"], default="blind")
    analyze.add_argument("--wg", required=True, help="workload graph file")
    analyze.add_argument("--strategy", action="append", required=True)
    analyze.add_argument("-p", type=int, default=8)
    analyze.add_argument("-c", type=float, default=1.0,
                         help="communication-to-processing cost ratio")
    analyze.add_argument("--param", action="append", metavar="KEY=VALUE")
    analyze.add_argument("--out", help="write the CSV here")
    add_common(analyze)
    analyze.set_defaults(func=cmd_analyze)

    compare = sub.add_parser("trace-compare", help="divergence between traces")
    compare.add_argument("--pair", nargs=2, action="append",
                         metavar=("REF", "CAND"))
    compare.add_argument("--out")
    add_common(compare)
    compare.set_defaults(func=cmd_trace_compare)

    bench = sub.add_parser("bench", help="run a strategy suite over instances")
    bench.add_argument("--domain-type", required=True, choices=["tiles", "grid", "sas"])
    bench.add_argument("--instances", nargs="*", help="instance files")
    bench.add_argument("--gen", help="generate instances, e.g. n=20,seed=7,scramble=25")
    bench.add_argument("--sas-heuristic", choices=["blind", "goalcount"], default="blind")
    bench.add_argument("--strategies", required=True,
                       help="comma-separated strategy names")
    bench.add_argument("-p", type=int, default=8)
    bench.add_argument("-c", type=float, default=1.0)
    bench.add_argument("--batch", type=int, default=DEFAULT_BATCH)
    bench.add_argument("--tiebreak", choices=["LIFO", "FIFO"], default="LIFO")
    bench.add_argument("--backend", choices=["bucket", "heap"], default="bucket")
    bench.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)
    bench.add_argument("--with-model", action="store_true",
                       help="add modeled sceff per run (enumerates workload graphs)")
    bench.add_argument("--param", action="append", metavar="KEY=VALUE")
    bench.add_argument("--out")
    add_common(bench)
    bench.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except Unsolvable as exc:
        print(f"unsolvable: {exc}", file=sys.stderr)
        return EXIT_UNSOLVABLE
    except (BudgetExceeded, MemoryBudgetExceeded) as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
