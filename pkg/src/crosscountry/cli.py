"""Command-line front end: ``crosscountry <subcommand> ...``.

Exit status is 0 on success, 1 when ``verify`` finds a mismatch and 2 for
usage or input errors.  Every run starts with a ``#``-prefixed header giving
the seed, a hash of the parsed configuration and a hash of the graph.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .elimination import order_cost, run_order
from .errors import CrossCountryError
from .graph import CompGraph, format_graph, read_graph, read_order, write_order
from .interpreter import accumulate_jacobian, max_relative_error, probe_point, reference_jacobian
from .program import Program, format_program, parse_program
from .randgen import random_program
from .search import SearchConfig, brute_force, mcts_search, portfolio_search, simulated_annealing
from .sparsity import format_table
from .strategies import STRATEGIES, baseline_order
from .tasks import REFERENCE_COUNTS, TASKS, build_task
from .trace import trace

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def config_hash(args: argparse.Namespace) -> str:
    # output destinations do not change results, so they stay out of the hash
    cfg = {k: v for k, v in sorted(vars(args).items()) if k not in ("func", "out", "csv", "plot")}
    return hashlib.sha256(json.dumps(cfg, sort_keys=True, default=str).encode()).hexdigest()[:16]


def header(args: argparse.Namespace, graph_hash: str = "-") -> str:
    seed = getattr(args, "seed", None)
    return (
        f"# crosscountry {__version__} {args.command}\n"
        f"# seed={seed if seed is not None else '-'} config={config_hash(args)} graph={graph_hash}\n"
    )


def _load_program(path) -> Program:
    return parse_program(Path(path).read_text())


def _load_graph(args) -> CompGraph:
    if getattr(args, "graph", None):
        return read_graph(args.graph)
    if getattr(args, "program", None):
        return trace(_load_program(args.program))
    if getattr(args, "task", None):
        return trace(build_task(args.task))
    raise UsageError("give one of --graph, --program or --task")


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


# -- subcommands -------------------------------------------------------------------


def cmd_trace(args) -> int:
    p = build_task(args.task) if args.task else _load_program(args.program)
    g = trace(p)
    text = header(args, g.digest()) + format_graph(g)
    _emit(text, args.out)
    if args.out:
        sys.stdout.write(header(args, g.digest()))
        print(f"wrote {g.n_inputs} inputs, {g.n_intermediates} intermediates, {g.n_outputs} outputs to {args.out}")
    return EXIT_OK


def cmd_cost(args) -> int:
    g = _load_graph(args)
    if (args.order is None) == (args.strategy is None):
        raise UsageError("give exactly one of --order or --strategy")
    order = read_order(g, args.order) if args.order else baseline_order(g, args.strategy)
    report = run_order(g.copy(), order)
    sys.stdout.write(header(args, g.digest()))
    sys.stdout.write(report.format(g.n_inputs))
    return EXIT_OK


def cmd_search(args) -> int:
    g = _load_graph(args)
    if args.method == "brute":
        r = brute_force(g, limit=args.limit)
    elif args.method == "mcts":
        r = mcts_search(g, budget=args.budget, rollout=args.rollout, seed=args.seed)
    elif args.method == "anneal":
        r = simulated_annealing(g, steps=args.steps, alpha=args.alpha, seed=args.seed)
    else:
        cfg = SearchConfig(
            mcts_budget=args.budget,
            rollout=args.rollout,
            anneal_steps=args.steps,
            anneal_alpha=args.alpha,
            seed=args.seed,
        )
        r = portfolio_search(g, cfg)
    sys.stdout.write(header(args, g.digest()))
    for name in STRATEGIES:
        print(f"{name:<12} {order_cost(g, baseline_order(g, name)):>10}")
    print(f"{args.method:<12} {r.best_cost:>10}  (evaluations={r.evaluations}, from {r.provenance})")
    if args.out:
        write_order(g, r.best_order, args.out)
        print(f"order written to {args.out}")
    return EXIT_OK


def cmd_verify(args) -> int:
    p = _load_program(args.graph_from_program)
    g = trace(p)
    if args.order:
        order = read_order(g, args.order)
    else:
        order = baseline_order(g, args.strategy or "reverse")
    x = probe_point(p, args.point)
    got = accumulate_jacobian(p, x, order)
    ref = reference_jacobian(p, x, args.reference)
    err = max_relative_error(got, ref)
    sys.stdout.write(header(args, g.digest()))
    ok = err <= args.tol
    print(f"max relative error {err:.3e} (tol {args.tol:.1e}, reference {args.reference}): {'ok' if ok else 'MISMATCH'}")
    return EXIT_OK if ok else EXIT_FAIL


BENCH_METHODS = ("forward", "reverse", "markowitz", "portfolio")


def bench_rows(tasks: Sequence[str], methods: Sequence[str], cfg: SearchConfig) -> list[dict]:
    rows = []
    for name in tasks:
        g = trace(build_task(name))
        row = {"task": name, "intermediates": g.n_intermediates, "graph": g.digest()}
        for m in methods:
            if m == "portfolio":
                row[m] = portfolio_search(g, cfg).best_cost
            else:
                row[m] = order_cost(g, baseline_order(g, m))
        ref = REFERENCE_COUNTS.get(name)
        for label, val in zip(("paper_forward", "paper_reverse", "paper_markowitz", "paper_best"), ref or ()):
            row[label] = val
        rows.append(row)
    return rows


def format_bench(rows: list[dict], methods: Sequence[str]) -> str:
    ref_cols = ["paper_forward", "paper_reverse", "paper_markowitz", "paper_best"]
    cols = ["task", "intermediates", *methods]
    width = {c: max(len(c), *(len(str(r.get(c, "-"))) for r in rows)) for c in cols}
    rw = max(len("paper (different trace)"), 24)
    head = "  ".join(f"{c:>{width[c]}}" if c != "task" else f"{c:<{width[c]}}" for c in cols)
    lines = [head + "  | " + f"{'paper (different trace)':<{rw}}"]
    lines.append(" " * len(head) + "  | " + "fwd / rev / mkw / best")
    for r in rows:
        cells = [f"{r[c]:<{width[c]}}" if c == "task" else f"{r.get(c, '-'):>{width[c]}}" for c in cols]
        ref = " / ".join(str(r.get(c, "-")) for c in ref_cols)
        lines.append("  ".join(cells) + "  | " + ref)
    return "\n".join(lines) + "\n"


def _plot(rows: list[dict], methods: Sequence[str], path: str) -> None:
    try:
        import matplotlib

        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
    except ImportError:
        raise UsageError("--plot needs matplotlib (pip install 'artifact[plot]')") from None
    import numpy as np

    fig, ax = plt.subplots(figsize=(max(6, 1.6 * len(rows)), 4))
    xs = np.arange(len(rows))
    w = 0.8 / len(methods)
    for k, m in enumerate(methods):
        ax.bar(xs + k * w, [r[m] for r in rows], w, label=m)
    ax.set_xticks(xs + 0.4 - w / 2)
    ax.set_xticklabels([r["task"] for r in rows], rotation=20)
    ax.set_ylabel("multiplications")
    ax.set_yscale("log")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def cmd_bench(args) -> int:
    tasks = _split(args.tasks) or list(TASKS)
    methods = _split(args.methods) or list(BENCH_METHODS)
    for t in tasks:
        if t not in TASKS:
            raise UsageError(f"unknown task {t!r}; choose from {', '.join(TASKS)}")
    for m in methods:
        if m not in BENCH_METHODS:
            raise UsageError(f"unknown method {m!r}; choose from {', '.join(BENCH_METHODS)}")
    cfg = SearchConfig(mcts_budget=args.budget, anneal_steps=args.steps, seed=args.seed)
    rows = bench_rows(tasks, methods, cfg)
    joint = hashlib.sha256("".join(r["graph"] for r in rows).encode()).hexdigest()[:16]
    sys.stdout.write(header(args, joint))
    sys.stdout.write(format_bench(rows, methods))
    if args.csv:
        fields = list(rows[0].keys())
        with open(args.csv, "w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=fields)
            w.writeheader()
            w.writerows(rows)
    if args.plot:
        _plot(rows, methods, args.plot)
    return EXIT_OK


def cmd_randgen(args) -> int:
    p = random_program(
        args.seed,
        n_in=args.n_in,
        n_out=args.n_out,
        n_intermediates=args.n_intermediates,
        vector=args.vector,
    )
    g = trace(p)
    _emit(header(args, g.digest()) + format_program(p), args.out)
    return EXIT_OK


def cmd_table(args) -> int:
    sys.stdout.write(header(args))
    sys.stdout.write(format_table())
    return EXIT_OK


def _split(s: Optional[str]) -> list[str]:
    return [t.strip() for t in s.split(",") if t.strip()] if s else []


# -- parser ------------------------------------------------------------------------


def _graph_source(sp: argparse.ArgumentParser) -> None:
    src = sp.add_mutually_exclusive_group()
    src.add_argument("--graph", help="graph file")
    src.add_argument("--program", help="program file, traced on the fly")
    src.add_argument("--task", choices=sorted(TASKS), help="built-in benchmark task")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="crosscountry", description="Cross-country Jacobian accumulation toolkit.")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("trace", help="trace a program into a graph file")
    src = sp.add_mutually_exclusive_group(required=True)
    src.add_argument("program", nargs="?", help="program file")
    src.add_argument("--task", choices=sorted(TASKS))
    sp.add_argument("--out", help="write the graph here instead of stdout")
    sp.set_defaults(func=cmd_trace)

    sp = sub.add_parser("cost", help="cost table of an elimination order")
    _graph_source(sp)
    sp.add_argument("--order", help="order file (1-based intermediate ids)")
    sp.add_argument("--strategy", choices=[*STRATEGIES, "min_markowitz"])
    sp.set_defaults(func=cmd_cost)

    sp = sub.add_parser("search", help="search for a cheap elimination order")
    _graph_source(sp)
    sp.add_argument("--method", choices=["brute", "mcts", "anneal", "portfolio"], default="portfolio")
    sp.add_argument("--budget", type=int, default=200, help="MCTS simulations per move")
    sp.add_argument("--steps", type=int, default=10_000, help="annealing proposals")
    sp.add_argument("--alpha", type=float, default=0.97, help="annealing decay per sweep")
    sp.add_argument("--rollout", choices=["markowitz_completion", "random"], default="markowitz_completion")
    sp.add_argument("--limit", type=int, default=9, help="brute-force size limit")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out", help="write the best order here")
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("verify", help="check an order's Jacobian against a reference")
    sp.add_argument("--graph-from-program", required=True, metavar="FILE", help="program file")
    sp.add_argument("--order", help="order file; defaults to --strategy")
    sp.add_argument("--strategy", choices=STRATEGIES)
    sp.add_argument("--point", default="random:0", help="zero, ones or random:SEED")
    sp.add_argument("--tol", type=float, default=1e-10)
    sp.add_argument("--reference", choices=["dual", "fd"], default="dual")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("bench", help="compare methods on the benchmark tasks")
    sp.add_argument("--tasks", help="comma-separated task names (default: all)")
    sp.add_argument("--methods", help="comma-separated subset of " + ",".join(BENCH_METHODS))
    sp.add_argument("--budget", type=int, default=200)
    sp.add_argument("--steps", type=int, default=10_000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--csv", help="also write the table as CSV")
    sp.add_argument("--plot", help="bar chart image path (needs matplotlib)")
    sp.set_defaults(func=cmd_bench)

    sp = sub.add_parser("randgen", help="generate a random program")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--n-in", type=int, default=2)
    sp.add_argument("--n-out", type=int, default=2)
    sp.add_argument("--n-intermediates", type=int, default=5)
    sp.add_argument("--vector", action="store_true", help="allow vector and matrix values")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_randgen)

    sp = sub.add_parser("table", help="print the contraction table")
    sp.set_defaults(func=cmd_table)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        ap.error(str(exc))
    except (CrossCountryError, OSError, ValueError) as exc:
        print(f"crosscountry {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
