"""``dijkstra-pq`` command line: ``gen``, ``run`` and ``bench`` subcommands."""
from __future__ import annotations

import argparse
import logging
import sys
import time

from .bench import BenchPlan, format_summary, run_bench, summarize, write_csv
from .generators import PlanarConfig, RandomConfig, generate_planar, generate_random
from .graph import INFINITY, GraphFormatError, load_graph, save_graph
from .solver import VARIANTS, get_path, get_solver

VARIANT_TITLES = {
    "fib": "Dijkstra with Fibonacci heap",
    "tree": "Dijkstra with self-balancing tree",
    "heap": "Dijkstra with binary heap",
    "basic": "Dijkstra (basic form)",
}


class UsageError(Exception):
    pass


def _variant_list(text: str) -> list[str]:
    names = [v.strip() for v in text.split(",") if v.strip()]
    for v in names:
        if v not in VARIANTS:
            raise argparse.ArgumentTypeError(f"unknown variant {v!r}; choose from {','.join(VARIANTS)}")
    return names


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _check_topology_flags(args) -> None:
    if args.topology == "planar":
        for flag, value in (("--p", args.p), ("--wmax", getattr(args, "wmax", None))):
            if value is not None:
                raise UsageError(f"{flag} does not apply to --topology planar")
    else:
        if args.p is None:
            raise UsageError("--topology random requires --p")
        if getattr(args, "side", None) is not None:
            raise UsageError("--side does not apply to --topology random")


def cmd_gen(args) -> int:
    _check_topology_flags(args)
    try:
        if args.topology == "planar":
            cfg = PlanarConfig(args.n, args.side if args.side is not None else 10_000.0, args.seed)
            graph = generate_planar(cfg)
        else:
            cfg = RandomConfig(args.n, args.p, args.wmax if args.wmax is not None else 10_000, args.seed)
            graph = generate_random(cfg)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    save_graph(graph, args.output, comments=[cfg.comment()])
    print(f"n={graph.n} m={graph.m}")
    return 0


def _path_line(s, u, labels, preds) -> str:
    head = f"v-{s} to v-{u},\t"
    if labels[u] is INFINITY:
        return head + "len = infinity. No path exists"
    path = ",".join(map(str, get_path(preds, s, u)))
    return head + f"len = {labels[u]}\tpath = [{path}]"


def cmd_run(args) -> int:
    graph = load_graph(args.graph)
    for name, x in (("source", args.source), ("target", args.target)):
        if x is not None and not 0 <= x < graph.n:
            raise ValueError(f"{name} {x} out of range [0, {graph.n})")
    solve = get_solver(args.variant)
    start = time.perf_counter()
    result = solve(graph, args.source, target=args.target)
    elapsed = time.perf_counter() - start
    print(f"Input graph has {graph.n} vertices and {graph.m} arcs")
    print(f"{VARIANT_TITLES[args.variant]} took {elapsed:.6g} sec.")
    if args.target is not None:
        print(_path_line(args.source, args.target, result.labels, result.preds))
    elif args.show_paths:
        print("Shortest paths from source to each vertex are as follows:")
        for u in range(graph.n):
            print(_path_line(args.source, u, result.labels, result.preds))
    return 0


def cmd_bench(args) -> int:
    _check_topology_flags(args)
    try:
        plan = BenchPlan(
            topology=args.topology,
            n_list=args.n_list,
            p=args.p,
            reps=args.reps,
            seed=args.seed,
            variants=args.variants,
            source=args.source_policy,
            warmup=not args.no_warmup,
            side=args.side if args.side is not None else 10_000.0,
            w_max=args.wmax if args.wmax is not None else 10_000,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    skipped = []
    records = run_bench(plan, skipped=skipped)
    with open(args.output, "w", encoding="ascii", newline="") as fh:
        write_csv(records, fh)
    print(format_summary(summarize(records)))
    for s in skipped:
        print(f"skipped n={s.n} rep={s.rep}: {s.reason}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dijkstra-pq", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a benchmark graph file")
    gen.add_argument("--topology", choices=["planar", "random"], required=True)
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--p", type=float)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--side", type=float, help="square side length (planar; default 10000)")
    gen.add_argument("--wmax", type=int, help="maximum arc weight (random; default 10000)")
    gen.add_argument("-o", "--output", required=True)
    gen.set_defaults(func=cmd_gen)

    run = sub.add_parser("run", help="solve single-source shortest paths on a graph file")
    run.add_argument("--graph", required=True)
    run.add_argument("--source", type=int, required=True)
    run.add_argument("--variant", choices=list(VARIANTS), default="heap")
    run.add_argument("--target", type=int)
    run.add_argument("--show-paths", action="store_true")
    run.set_defaults(func=cmd_run)

    bench = sub.add_parser("bench", help="time solver variants on generated graphs")
    bench.add_argument("--topology", choices=["planar", "random"], required=True)
    bench.add_argument("--n-list", type=_int_list, required=True)
    bench.add_argument("--p", type=float)
    bench.add_argument("--reps", type=int, default=100)
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--variants", type=_variant_list, default=list(VARIANTS))
    bench.add_argument("--source-policy", choices=["fixed", "random"], default="fixed")
    bench.add_argument("--no-warmup", action="store_true", help="skip the untimed warm-up run")
    bench.add_argument("--side", type=float)
    bench.add_argument("--wmax", type=int)
    bench.add_argument("-o", "--output", required=True)
    bench.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except (OSError, GraphFormatError, ValueError) as exc:
        print(f"dijkstra-pq: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
