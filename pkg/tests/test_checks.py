from dijkstra_pq import checks
from dijkstra_pq.checks import OpTrace, heap_oracle_check, random_trace, solver_agreement_check
from dijkstra_pq.graph import graph_from_arcs


def test_trace_is_reproducible_and_sized():
    assert random_trace(4, 150) == random_trace(4, 150)
    assert len(random_trace(4, 150).ops) == 150
    assert random_trace(4, 0).ops == ()


def test_trace_is_decrease_heavy():
    ops = [op[0] for s in range(50) for op in random_trace(s, 200).ops]
    share = {k: ops.count(k) / len(ops) for k in ("insert", "decrease", "extract")}
    assert share["decrease"] > share["insert"] > share["extract"] * 0.9
    assert share["decrease"] > 0.35


def test_trace_includes_ignored_increases():
    found = False
    for s in range(20):
        live = {}
        for op in random_trace(s, 200).ops:
            if op[0] == "insert":
                live[op[1]] = op[2]
            elif op[0] == "decrease":
                if op[2] > live[op[1]]:
                    found = True
                live[op[1]] = min(live[op[1]], op[2])
            else:
                live.pop(min(live, key=live.get))
    assert found


def test_oracle_passes_random_traces():
    for s in range(300):
        report = heap_oracle_check(random_trace(s, s % 201))
        assert report, report.failures


def test_oracle_flags_a_wrong_heap(monkeypatch):
    trace = OpTrace(3, (("insert", 0, 5), ("insert", 1, 2), ("extract",)))
    assert heap_oracle_check(trace).extracted == [(1, 2)]

    real = checks.FibHeap.extract_min

    def broken(self):
        v, k = real(self)
        return v, k + 1

    monkeypatch.setattr(checks.FibHeap, "extract_min", broken)
    report = heap_oracle_check(trace)
    assert not report and "step 2" in report.failures[0]


def test_oracle_reports_invalid_trace():
    report = heap_oracle_check(OpTrace(2, (("decrease", 0, 1),)))
    assert not report and "KeyError" in report.failures[0]


def test_solver_agreement(eight, cycle):
    assert solver_agreement_check(eight, 0)
    assert solver_agreement_check(cycle, 3)
    g = graph_from_arcs(4, [(0, 1, 1), (1, 0, 1), (2, 3, 0)])
    assert solver_agreement_check(g, 2)


def test_solver_agreement_flags_bad_variant(monkeypatch, cycle):
    good = checks.VARIANTS["heap"]

    def off_by_one(graph, s, target=None):
        res = good(graph, s)
        res.labels[-1] += 1
        return res

    monkeypatch.setitem(checks.VARIANTS, "heap", off_by_one)
    report = solver_agreement_check(cycle, 0)
    assert not report and report.failures[0].startswith("heap:")
