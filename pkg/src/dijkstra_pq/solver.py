"""Dijkstra's algorithm with four priority-queue strategies.

==========  =========================================  ===============
variant     queue                                      complexity
==========  =========================================  ===============
``basic``   unordered candidate list, linear min scan  O(n^2)
``tree``    ordered set of (label, vertex) pairs       O(m log n)
``heap``    binary heap, duplicates + lazy deletion    O(m log m)
``fib``     Fibonacci heap with decrease-key           O(m + n log n)
==========  =========================================  ===============

All variants return identical labels.  Predecessors can differ between
variants when several shortest paths exist.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Callable, Optional

from sortedcontainers import SortedList

from .fibheap import FibHeap
from .graph import INFINITY, LABEL_MAX, Graph, LabelOverflowError


@dataclass
class ShortestPathResult:
    """Labels ``L`` and predecessors ``P`` of one run from ``source``.

    ``labels[u]`` is :data:`INFINITY` when no path was found and
    ``preds[u]`` is ``None`` for the source and for unreached vertices.
    ``order`` lists vertices in the order they were distinguished and
    ``settled[u]`` says whether ``u`` was.  After an early exit
    (``complete=False``) only settled labels are final.
    """

    source: int
    labels: list
    preds: list
    settled: list = field(repr=False, default_factory=list)
    order: list = field(repr=False, default_factory=list)
    complete: bool = True

    def is_final(self, u: int) -> bool:
        return self.complete or self.settled[u]

    def path(self, u: int) -> list[int]:
        return get_path(self.preds, self.source, u)


def _overflow(u, v, nd):
    return LabelOverflowError(f"label for vertex {v} via {u} would be {nd}, beyond 2**64 - 1")


def _check_source(graph: Graph, s: int, name: str = "source") -> None:
    if not 0 <= s < graph.n:
        raise ValueError(f"{name} {s} out of range [0, {graph.n})")


def solve_basic(graph: Graph, s: int, target: Optional[int] = None) -> ShortestPathResult:
    """Basic form: the minimum-label candidate is found by a linear scan."""
    _check_source(graph, s)
    n, heads, weights = graph.n, graph.heads, graph.weights
    inf = INFINITY
    L = [inf] * n
    P = [None] * n
    D = [False] * n
    order = []
    L[s] = 0
    candidates = [s]
    complete = True
    while candidates:
        pos = 0
        best = L[candidates[0]]
        for i in range(1, len(candidates)):
            if L[candidates[i]] < best:
                best = L[candidates[i]]
                pos = i
        u = candidates[pos]
        candidates[pos] = candidates[-1]
        candidates.pop()
        D[u] = True
        order.append(u)
        if u == target:
            complete = False
            break
        du = L[u]
        for v, w in zip(heads[u], weights[u]):
            if not D[v]:
                nd = du + w
                if nd < L[v]:
                    if nd > LABEL_MAX:
                        raise _overflow(u, v, nd)
                    if L[v] is inf:
                        candidates.append(v)
                    L[v] = nd
                    P[v] = u
    return ShortestPathResult(s, L, P, D, order, complete)


def solve_tree(graph: Graph, s: int, target: Optional[int] = None) -> ShortestPathResult:
    """Ordered-set queue; decrease-key is an erase followed by an insert."""
    _check_source(graph, s)
    n, heads, weights = graph.n, graph.heads, graph.weights
    inf = INFINITY
    L = [inf] * n
    P = [None] * n
    D = [False] * n
    order = []
    L[s] = 0
    Q = SortedList([(0, s)])
    pop, add, discard = Q.pop, Q.add, Q.remove
    complete = True
    while Q:
        du, u = pop(0)
        D[u] = True
        order.append(u)
        if u == target:
            complete = False
            break
        for v, w in zip(heads[u], weights[u]):
            if not D[v]:
                nd = du + w
                lv = L[v]
                if nd < lv:
                    if nd > LABEL_MAX:
                        raise _overflow(u, v, nd)
                    if lv is not inf:
                        discard((lv, v))
                    add((nd, v))
                    L[v] = nd
                    P[v] = u
    return ShortestPathResult(s, L, P, D, order, complete)


def solve_binary_heap(graph: Graph, s: int, target: Optional[int] = None) -> ShortestPathResult:
    """Binary heap without decrease-key: improved labels are pushed again and
    stale entries are skipped when popped."""
    _check_source(graph, s)
    n, heads, weights = graph.n, graph.heads, graph.weights
    inf = INFINITY
    L = [inf] * n
    P = [None] * n
    D = [False] * n
    order = []
    L[s] = 0
    Q = [(0, s)]
    pop, push = heapq.heappop, heapq.heappush
    complete = True
    while Q:
        du, u = pop(Q)
        if D[u]:
            continue
        D[u] = True
        order.append(u)
        if u == target:
            complete = False
            break
        for v, w in zip(heads[u], weights[u]):
            if not D[v]:
                nd = du + w
                if nd < L[v]:
                    if nd > LABEL_MAX:
                        raise _overflow(u, v, nd)
                    L[v] = nd
                    P[v] = u
                    push(Q, (nd, v))
    return ShortestPathResult(s, L, P, D, order, complete)


def solve_fibonacci(graph: Graph, s: int, target: Optional[int] = None) -> ShortestPathResult:
    """Fibonacci-heap queue: first finite label inserts, improvements decrease-key."""
    _check_source(graph, s)
    n, heads, weights = graph.n, graph.heads, graph.weights
    inf = INFINITY
    L = [inf] * n
    P = [None] * n
    D = [False] * n
    order = []
    L[s] = 0
    Q = FibHeap(n)
    Q.insert(s, 0)
    insert, decrease, extract = Q.insert, Q.decrease_key, Q.extract_min
    complete = True
    while Q.count:
        u, du = extract()
        D[u] = True
        order.append(u)
        if u == target:
            complete = False
            break
        for v, w in zip(heads[u], weights[u]):
            if not D[v]:
                nd = du + w
                lv = L[v]
                if nd < lv:
                    if nd > LABEL_MAX:
                        raise _overflow(u, v, nd)
                    if lv is inf:
                        insert(v, nd)
                    else:
                        decrease(v, nd)
                    L[v] = nd
                    P[v] = u
    return ShortestPathResult(s, L, P, D, order, complete)


Solver = Callable[..., ShortestPathResult]

VARIANTS: dict[str, Solver] = {
    "basic": solve_basic,
    "tree": solve_tree,
    "heap": solve_binary_heap,
    "fib": solve_fibonacci,
}


def get_solver(variant: str) -> Solver:
    try:
        return VARIANTS[variant]
    except KeyError:
        raise ValueError(f"unknown variant {variant!r}; choose from {', '.join(VARIANTS)}") from None


def solve(graph: Graph, s: int, variant: str = "heap") -> ShortestPathResult:
    return get_solver(variant)(graph, s)


def solve_target(graph: Graph, s: int, t: int, variant: str = "heap") -> ShortestPathResult:
    """Stop as soon as ``t`` is distinguished.  ``L(t)`` and its path are final."""
    _check_source(graph, t, "target")
    return get_solver(variant)(graph, s, target=t)


def get_path(preds, s: int, u: int) -> list[int]:
    """Vertices of the recorded ``s``-``u`` path; empty when ``P(u)`` is null
    (``u`` unreached, or ``u == s``)."""
    if preds[u] is None:
        return []
    path = []
    x = u
    for _ in range(len(preds)):
        if x == s:
            break
        path.append(x)
        x = preds[x]
        if x is None:
            raise ValueError(f"predecessor chain from {u} ends before reaching {s}")
    else:
        raise ValueError(f"predecessor chain from {u} does not reach {s}")
    path.append(s)
    path.reverse()
    return path


def path_weight(graph: Graph, path: list[int]) -> int:
    """Total weight of a vertex sequence, taking the lightest of any parallel arcs."""
    total = 0
    for u, v in zip(path, path[1:]):
        best = min((w for x, w in zip(graph.heads[u], graph.weights[u]) if x == v), default=None)
        if best is None:
            raise ValueError(f"no arc ({u}, {v}) in graph")
        total += best
    return total


def bellman_ford(graph: Graph, s: int) -> ShortestPathResult:
    """Reference labels by rounds of full arc relaxation (test oracle, O(nm))."""
    _check_source(graph, s)
    n = graph.n
    inf = INFINITY
    L = [inf] * n
    P = [None] * n
    L[s] = 0
    arcs = list(graph.arcs())
    for _ in range(max(n - 1, 0)):
        changed = False
        for u, v, w in arcs:
            du = L[u]
            if du is not inf and du + w < L[v]:
                L[v] = du + w
                P[v] = u
                changed = True
        if not changed:
            break
    settled = [lab is not inf for lab in L]
    return ShortestPathResult(s, L, P, settled, [], True)
