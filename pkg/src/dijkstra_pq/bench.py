"""Timed solver runs on generated graphs, aggregation, and CSV I/O.

For every vertex count and repetition a fresh graph is generated from a seed
derived from ``(base seed, n, rep)``; every requested variant then runs on
that same graph and source, so per-rep comparisons are paired.  Only the
solver call is inside the timed region.  Garbage collection is paused while
timing, as :mod:`timeit` does.
"""
from __future__ import annotations

import csv
import gc
import logging
import statistics
import time
from dataclasses import dataclass, fields
from typing import IO, Callable, Iterable, Optional

from . import rng
from .generators import PlanarConfig, RandomConfig, generate_planar, generate_random
from .graph import Graph
from .solver import VARIANTS, get_solver

log = logging.getLogger(__name__)

TOPOLOGIES = ("planar", "random")
SOURCE_POLICIES = ("fixed", "random")
CSV_COLUMNS = ("topology", "n", "m", "p", "seed", "variant", "rep", "source", "elapsed_seconds")

# Peak bytes per generated random arc (numpy staging plus the shared-int
# adjacency tuples), measured on CPython 3.10.
_BYTES_PER_RANDOM_ARC = 56
# Headroom: the kernel OOM killer ends the process before MemoryError fires.
_MEMORY_HEADROOM = 0.8


@dataclass(frozen=True)
class BenchPlan:
    topology: str
    n_list: tuple
    p: Optional[float] = None
    reps: int = 100
    seed: int = 0
    variants: tuple = tuple(VARIANTS)
    source: str = "fixed"
    warmup: bool = True
    side: float = 10_000.0
    w_max: int = 10_000

    def __post_init__(self):
        object.__setattr__(self, "n_list", tuple(self.n_list))
        object.__setattr__(self, "variants", tuple(self.variants))
        if self.topology not in TOPOLOGIES:
            raise ValueError(f"topology must be one of {TOPOLOGIES}, got {self.topology!r}")
        if not self.n_list:
            raise ValueError("n_list must not be empty")
        if list(self.n_list) != sorted(self.n_list):
            raise ValueError(f"n_list must be sorted ascending, got {list(self.n_list)}")
        if self.reps < 1:
            raise ValueError(f"reps must be at least 1, got {self.reps}")
        if not self.variants:
            raise ValueError("at least one variant is required")
        for v in self.variants:
            get_solver(v)
        if self.source not in SOURCE_POLICIES:
            raise ValueError(f"source policy must be one of {SOURCE_POLICIES}, got {self.source!r}")
        if self.topology == "random":
            if self.p is None:
                raise ValueError("random topology needs an arc probability p")
            RandomConfig(self.n_list[0], self.p, self.w_max)
        else:
            if self.p is not None:
                raise ValueError("p applies only to the random topology")
            PlanarConfig(self.n_list[0], self.side)


@dataclass(frozen=True)
class BenchRecord:
    """One timed solver call.  ``seed`` is the derived seed of the graph used."""

    topology: str
    n: int
    m: int
    p: Optional[float]
    seed: int
    variant: str
    rep: int
    source: int
    elapsed: float


@dataclass(frozen=True)
class BenchSkip:
    topology: str
    n: int
    p: Optional[float]
    rep: int
    reason: str


@dataclass(frozen=True)
class Summary:
    topology: str
    p: Optional[float]
    variant: str
    n: int
    runs: int
    mean_m: float
    mean: float
    stddev: float


def graph_seed(base_seed: int, n: int, rep: int) -> int:
    return rng.derive_seed(base_seed, n, rep)


def pick_source(plan: BenchPlan, n: int, seed: int) -> int:
    if plan.source == "fixed":
        return 0
    return int(rng.uniform_int(rng.derive_seed(seed, 0x5A), [0], 0, n - 1)[0])


def make_graph(plan: BenchPlan, n: int, seed: int) -> Graph:
    if plan.topology == "planar":
        return generate_planar(PlanarConfig(n, plan.side, seed))
    return generate_random(RandomConfig(n, plan.p, plan.w_max, seed))


def _available_memory() -> Optional[int]:
    try:
        with open("/proc/meminfo") as fh:
            for line in fh:
                if line.startswith("MemAvailable:"):
                    return int(line.split()[1]) * 1024
    except OSError:
        pass
    return None


def _too_big(plan: BenchPlan, n: int) -> Optional[str]:
    if plan.topology != "random":
        return None
    need = plan.p * n * (n - 1) * _BYTES_PER_RANDOM_ARC
    avail = _available_memory()
    if avail is not None and need > _MEMORY_HEADROOM * avail:
        return f"estimated {need / 2**30:.1f} GiB for ~{plan.p * n * (n - 1):.0f} arcs exceeds {_MEMORY_HEADROOM:.0%} of {avail / 2**30:.1f} GiB available"
    return None


def time_call(solve, graph: Graph, source: int) -> float:
    enabled = gc.isenabled()
    gc.disable()
    try:
        start = time.perf_counter()
        solve(graph, source)
        return time.perf_counter() - start
    finally:
        if enabled:
            gc.enable()


def run_bench(plan: BenchPlan, *, skipped: Optional[list] = None,
              progress: Optional[Callable[[BenchRecord], None]] = None) -> list[BenchRecord]:
    """Run the plan and return one record per (n, rep, variant).

    Points whose graph cannot be built (estimated or actual memory
    exhaustion) are logged, appended to ``skipped`` when given, and left out.
    """
    records = []
    for n in plan.n_list:
        for rep in range(plan.reps):
            seed = graph_seed(plan.seed, n, rep)
            reason = _too_big(plan, n)
            graph = None
            if reason is None:
                try:
                    graph = make_graph(plan, n, seed)
                except MemoryError:
                    reason = "out of memory while generating the graph"
            if graph is None:
                log.warning("skipping %s n=%d rep=%d: %s", plan.topology, n, rep, reason)
                if skipped is not None:
                    skipped.append(BenchSkip(plan.topology, n, plan.p, rep, reason))
                continue
            source = pick_source(plan, n, seed)
            for variant in plan.variants:
                solve = get_solver(variant)
                if plan.warmup:
                    solve(graph, source)
                elapsed = time_call(solve, graph, source)
                rec = BenchRecord(plan.topology, n, graph.m, plan.p, seed, variant, rep, source, elapsed)
                records.append(rec)
                if progress is not None:
                    progress(rec)
            del graph
    return records


def summarize(records: Iterable[BenchRecord]) -> list[Summary]:
    """Mean and sample standard deviation of elapsed time per (variant, n).

    Groups keep first-seen order.  A single-run group has stddev 0.
    """
    groups: dict[tuple, list[BenchRecord]] = {}
    for rec in records:
        groups.setdefault((rec.topology, rec.p, rec.variant, rec.n), []).append(rec)
    out = []
    for (topology, p, variant, n), recs in groups.items():
        times = [r.elapsed for r in recs]
        sd = statistics.stdev(times) if len(times) > 1 else 0.0
        out.append(Summary(topology, p, variant, n, len(recs),
                           statistics.fmean(r.m for r in recs), statistics.fmean(times), sd))
    return out


def format_summary(summaries: Iterable[Summary]) -> str:
    lines = [f"{'topology':<8} {'p':>5} {'variant':<6} {'n':>9} {'mean m':>12} {'runs':>5}  mean +- stddev (s)"]
    for s in summaries:
        p = "-" if s.p is None else f"{s.p:g}"
        lines.append(f"{s.topology:<8} {p:>5} {s.variant:<6} {s.n:>9} {s.mean_m:>12.0f} {s.runs:>5}  "
                     f"{s.mean:.6f} +- {s.stddev:.6f}")
    return "\n".join(lines)


def write_csv(records: Iterable[BenchRecord], stream: IO[str]) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in records:
        writer.writerow([r.topology, r.n, r.m, "" if r.p is None else repr(r.p), r.seed,
                         r.variant, r.rep, r.source, repr(r.elapsed)])


def read_csv(stream: IO[str]) -> list[BenchRecord]:
    reader = csv.reader(stream)
    header = next(reader, None)
    if tuple(header or ()) != CSV_COLUMNS:
        raise ValueError(f"unexpected CSV header {header!r}")
    names = [f.name for f in fields(BenchRecord)]
    out = []
    for row in reader:
        topology, n, m, p, seed, variant, rep, source, elapsed = row
        values = (topology, int(n), int(m), None if p == "" else float(p), int(seed),
                  variant, int(rep), int(source), float(elapsed))
        out.append(BenchRecord(**dict(zip(names, values))))
    return out
