import io
import math

import pytest

from dijkstra_pq import bench
from dijkstra_pq.bench import BenchPlan, BenchRecord, format_summary, read_csv, run_bench, summarize, write_csv


def rec(variant="heap", n=10, elapsed=1.0, rep=0, m=20, p=None, topology="planar"):
    return BenchRecord(topology, n, m, p, 1, variant, rep, 0, elapsed)


def test_record_count():
    plan = BenchPlan("planar", [1000], reps=3, variants=("basic", "tree", "heap", "fib"))
    records = run_bench(plan)
    assert len(records) == 12
    assert {(r.variant, r.rep) for r in records} == {(v, k) for v in plan.variants for k in range(3)}
    assert all(r.elapsed > 0 and r.n == 1000 and r.m <= 6 * 1000 - 12 for r in records)


def test_graphs_are_deterministic_and_fresh_per_rep():
    plan = BenchPlan("random", [40], p=0.3, reps=3, seed=9, variants=("heap",), source="random")
    a, b = run_bench(plan), run_bench(plan)
    key = lambda rs: [(r.seed, r.m, r.source) for r in rs]
    assert key(a) == key(b)
    assert len({r.seed for r in a}) == 3
    assert all(r.seed == bench.graph_seed(9, 40, r.rep) for r in a)


def test_variants_share_graph_and_source():
    records = run_bench(BenchPlan("planar", [200], reps=2, source="random", variants=("basic", "fib")))
    for rep in range(2):
        same = [(r.seed, r.m, r.source) for r in records if r.rep == rep]
        assert len(set(same)) == 1


def test_fixed_source_is_zero():
    assert all(r.source == 0 for r in run_bench(BenchPlan("planar", [50], reps=2)))


def test_warmup_calls(monkeypatch):
    calls = []
    monkeypatch.setitem(bench.VARIANTS, "heap", lambda g, s: calls.append(s))
    run_bench(BenchPlan("planar", [20], reps=2, variants=("heap",)))
    assert len(calls) == 4
    calls.clear()
    run_bench(BenchPlan("planar", [20], reps=2, variants=("heap",), warmup=False))
    assert len(calls) == 2


def test_progress_callback():
    seen = []
    out = run_bench(BenchPlan("planar", [30], reps=2, variants=("tree",)), progress=seen.append)
    assert seen == out


def test_memory_estimate_skips(monkeypatch):
    monkeypatch.setattr(bench, "_available_memory", lambda: 10**6)
    skipped = []
    plan = BenchPlan("random", [100, 10_000], p=0.9, reps=2, variants=("heap", "fib"))
    out = run_bench(plan, skipped=skipped)
    # About 0.5 MB is estimated for n = 100, so only the large point is skipped.
    assert {r.n for r in out} == {100}
    assert [(s.n, s.rep) for s in skipped] == [(10_000, 0), (10_000, 1)]
    assert "GiB" in skipped[0].reason


def test_memory_error_skips(monkeypatch):
    def boom(plan, n, seed):
        raise MemoryError

    monkeypatch.setattr(bench, "make_graph", boom)
    skipped = []
    assert run_bench(BenchPlan("planar", [10], reps=1), skipped=skipped) == []
    assert skipped[0].reason.startswith("out of memory")


def test_real_full_scale_point_is_estimated_too_big():
    # n = 10^4 at p = 0.9 needs about 5 GB; the harness must skip, not crash.
    avail = bench._available_memory()
    if avail is None or bench._MEMORY_HEADROOM * avail > 0.9 * 10**4 * (10**4 - 1) * bench._BYTES_PER_RANDOM_ARC:
        pytest.skip("machine has enough memory for the full-scale dense point")
    skipped = []
    plan = BenchPlan("random", [10_000], p=0.9, reps=1, variants=("heap", "fib"))
    assert run_bench(plan, skipped=skipped) == [] and len(skipped) == 1


@pytest.mark.parametrize("bad", [
    dict(topology="grid", n_list=[10]),
    dict(topology="planar", n_list=[]),
    dict(topology="planar", n_list=[100, 10]),
    dict(topology="planar", n_list=[10], reps=0),
    dict(topology="planar", n_list=[10], variants=()),
    dict(topology="planar", n_list=[10], variants=("quick",)),
    dict(topology="planar", n_list=[10], source="middle"),
    dict(topology="planar", n_list=[10], p=0.5),
    dict(topology="random", n_list=[10]),
    dict(topology="random", n_list=[10], p=2.0),
    dict(topology="planar", n_list=[2]),
])
def test_plan_validation(bad):
    with pytest.raises(ValueError):
        BenchPlan(**bad)


def test_summarize_constant_times():
    (s,) = summarize([rec(elapsed=2.0, rep=k) for k in range(3)])
    assert (s.runs, s.mean, s.stddev) == (3, 2.0, 0.0)


def test_summarize_sample_stddev():
    (s,) = summarize([rec(elapsed=1.0), rec(elapsed=3.0, rep=1)])
    assert s.mean == 2.0 and math.isclose(s.stddev, math.sqrt(2))


def test_summarize_single_run():
    (s,) = summarize([rec(elapsed=0.5)])
    assert s.stddev == 0.0


def test_summarize_matches_two_pass_formula():
    import random

    r = random.Random(0)
    xs = [r.uniform(0.001, 0.01) for _ in range(57)]
    (s,) = summarize([rec(elapsed=x, rep=i) for i, x in enumerate(xs)])
    mean = sum(xs) / len(xs)
    var = sum((x - mean) ** 2 for x in xs) / (len(xs) - 1)
    assert math.isclose(s.mean, mean, rel_tol=1e-12)
    assert math.isclose(s.stddev, math.sqrt(var), rel_tol=1e-9)


def test_summarize_groups_in_first_seen_order():
    out = summarize([rec("fib", 10), rec("heap", 10), rec("fib", 20), rec("fib", 10, rep=1)])
    assert [(s.variant, s.n, s.runs) for s in out] == [("fib", 10, 2), ("heap", 10, 1), ("fib", 20, 1)]
    text = format_summary(out)
    assert len(text.splitlines()) == 4 and "fib" in text


def test_csv_round_trip():
    records = [rec(elapsed=0.1 + 0.2), rec("fib", 50, 1e-7, p=0.25, topology="random")]
    buf = io.StringIO()
    write_csv(records, buf)
    lines = buf.getvalue().splitlines()
    assert lines[0] == "topology,n,m,p,seed,variant,rep,source,elapsed_seconds"
    assert lines[1].split(",")[3] == ""
    assert read_csv(io.StringIO(buf.getvalue())) == records


def test_csv_bad_header():
    with pytest.raises(ValueError):
        read_csv(io.StringIO("a,b\n"))
