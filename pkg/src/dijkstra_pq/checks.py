"""Cross-checks that bind the heap and solvers to independent oracles.

Checks report failures in a :class:`CheckReport` instead of raising, so a
sweep can count and describe every failing case.
"""
from __future__ import annotations

import bisect
import random
from dataclasses import dataclass, field

from .fibheap import FibHeap
from .graph import INFINITY, Graph
from .solver import VARIANTS, bellman_ford, get_path, path_weight

INSERT, DECREASE, EXTRACT = "insert", "decrease", "extract"


@dataclass(frozen=True)
class OpTrace:
    """Heap operations over vertices ``0 .. capacity-1``.

    Each op is ``("insert", vertex, key)``, ``("decrease", vertex, key)`` or
    ``("extract",)``.
    """

    capacity: int
    ops: tuple = ()


@dataclass
class CheckReport:
    passed: bool = True
    failures: list = field(default_factory=list)
    extracted: list = field(default_factory=list)

    def fail(self, message: str) -> None:
        self.passed = False
        self.failures.append(message)

    def __bool__(self):
        return self.passed


def random_trace(seed: int, length: int, capacity: int = 32, max_key: int = 10_000) -> OpTrace:
    """A valid trace biased toward decrease-key.

    Roughly 30% inserts, 45% decreases (one in ten of them an ignored
    increase attempt, one in twenty a decrease to the current key) and 25%
    extracts, redrawn when a precondition fails.  Live keys are kept distinct
    so the extraction order, and hence validity, does not depend on how the
    heap breaks ties.
    """
    rand = random.Random(seed).random
    live: dict[int, int] = {}
    used: set[int] = set()
    free = list(range(capacity))
    ops = []
    while len(ops) < length:
        r = rand()
        if r < 0.30:
            if not free:
                continue
            k = int(rand() * (max_key + 1))
            if k in used:
                continue
            v = free.pop(int(rand() * len(free)))
            live[v] = k
            used.add(k)
            ops.append((INSERT, v, k))
        elif r < 0.75:
            if not live:
                continue
            vs = list(live)
            v = vs[int(rand() * len(vs))]
            old = live[v]
            kind = rand()
            if kind < 0.1:
                k = old + 1 + int(rand() * 50)
            elif kind < 0.15:
                k = old
            else:
                k = int(rand() * (old + 1))
                if k in used:
                    continue
                used.discard(old)
                used.add(k)
                live[v] = k
            ops.append((DECREASE, v, k))
        else:
            if not live:
                continue
            v = min(live, key=live.__getitem__)
            used.discard(live.pop(v))
            free.append(v)
            ops.append((EXTRACT,))
    return OpTrace(capacity, tuple(ops))


class SortedReferenceQueue:
    """Decrease-key queue over a sorted multiset of ``(key, vertex)`` pairs.

    A plain list kept sorted with :mod:`bisect`; traces hold a few dozen
    entries, where this beats a tree-backed container.
    """

    def __init__(self):
        self._entries: list[tuple[int, int]] = []
        self._keys: dict[int, int] = {}

    def __len__(self):
        return len(self._keys)

    def insert(self, vertex, key):
        if vertex in self._keys:
            raise ValueError(f"vertex {vertex} already queued")
        self._keys[vertex] = key
        bisect.insort(self._entries, (key, vertex))

    def decrease_key(self, vertex, key):
        old = self._keys[vertex]
        if key > old:
            return
        self.remove(vertex, old)
        self.insert(vertex, key)

    def min_key(self):
        return self._entries[0][0]

    def remove(self, vertex, key):
        entries = self._entries
        i = bisect.bisect_left(entries, (key, vertex))
        if i == len(entries) or entries[i] != (key, vertex):
            raise KeyError((key, vertex))
        del entries[i]
        del self._keys[vertex]

    def holds(self, vertex, key) -> bool:
        return self._keys.get(vertex) == key


def heap_oracle_check(trace: OpTrace, check_structure: bool = True) -> CheckReport:
    """Replay ``trace`` on a :class:`FibHeap` and on the sorted reference.

    Passes iff each extraction returns the reference's minimum key for a vertex
    the reference holds at that key, sizes agree throughout and, when
    ``check_structure`` is set, the heap invariants hold after every operation.
    Extraction ties may pick different vertices; the reference follows the heap.
    """
    report = CheckReport()
    heap = FibHeap(trace.capacity)
    ref = SortedReferenceQueue()
    check = heap.check_invariants if check_structure else None
    extracted = report.extracted
    step, op = 0, None
    try:
        for step, op in enumerate(trace.ops):
            kind = op[0]
            if kind == INSERT:
                heap.insert(op[1], op[2])
                ref.insert(op[1], op[2])
            elif kind == DECREASE:
                heap.decrease_key(op[1], op[2])
                ref.decrease_key(op[1], op[2])
            else:
                vertex, key = heap.extract_min()
                extracted.append((vertex, key))
                expected = ref.min_key()
                if key != expected or not ref.holds(vertex, key):
                    report.fail(f"step {step}: extracted ({vertex}, {key}), reference minimum key {expected}")
                    return report
                ref.remove(vertex, key)
            if heap.count != len(ref._keys):
                report.fail(f"step {step}: heap size {heap.count} != reference size {len(ref)}")
                return report
            if check is not None:
                check()
    except AssertionError as exc:
        report.fail(f"step {step} {op}: invariant violated: {exc}")
    except (KeyError, ValueError, IndexError) as exc:
        report.fail(f"step {step} {op}: {type(exc).__name__}: {exc}")
    return report


def solver_agreement_check(graph: Graph, s: int) -> CheckReport:
    """All four variants agree with Bellman-Ford and produce consistent trees.

    For every variant: labels equal the oracle's, ``P(s)`` is null, each
    predecessor arc is tight, every arc satisfies the relaxation bound, paths
    are simple and weigh exactly their label, vertices are distinguished once
    and in nondecreasing label order.
    """
    report = CheckReport()
    oracle = bellman_ford(graph, s).labels
    arcs = list(graph.arcs())
    for name, solve in VARIANTS.items():
        res = solve(graph, s)
        L, P = res.labels, res.preds
        if L != oracle:
            bad = next(u for u in range(graph.n) if L[u] != oracle[u])
            report.fail(f"{name}: L({bad})={L[bad]} but Bellman-Ford gives {oracle[bad]}")
            continue
        if P[s] is not None or L[s] != 0:
            report.fail(f"{name}: source has L={L[s]}, P={P[s]}")
        for u, v, w in arcs:
            if L[u] is not INFINITY and L[v] > L[u] + w:
                report.fail(f"{name}: arc ({u},{v}) not relaxed: {L[v]} > {L[u]} + {w}")
                break
        for u in range(graph.n):
            if u != s and (L[u] is INFINITY) != (P[u] is None):
                report.fail(f"{name}: vertex {u} has L={L[u]} but P={P[u]}")
                break
            if P[u] is None:
                continue
            path = get_path(P, s, u)
            if len(set(path)) != len(path):
                report.fail(f"{name}: path to {u} repeats a vertex: {path}")
                break
            if path_weight(graph, path) != L[u]:
                report.fail(f"{name}: path to {u} weighs {path_weight(graph, path)}, label {L[u]}")
                break
        order = res.order
        if len(set(order)) != len(order):
            report.fail(f"{name}: a vertex was distinguished twice")
        if any(L[a] > L[b] for a, b in zip(order, order[1:])):
            report.fail(f"{name}: extraction order is not monotone")
        if sorted(order) != [u for u in range(graph.n) if L[u] is not INFINITY]:
            report.fail(f"{name}: distinguished set differs from reachable set")
    return report
