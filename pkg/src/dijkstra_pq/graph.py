"""Immutable directed arc-weighted graphs and their text file format.

A graph is built with :class:`GraphBuilder` and frozen with
:meth:`GraphBuilder.build`.  Vertices are the integers ``0 .. n-1``.  The
adjacency list of ``u`` is kept as two parallel tuples, ``heads[u]`` and
``weights[u]``, in insertion order; :meth:`Graph.neighbours` offers the same
data as :class:`Neighbour` records.

File format (one record per line, single-space separated)::

    c <free comment text>
    p sp <n> <m>
    a <u> <v> <w>        # exactly m of these, 0 <= u, v < n, w >= 0
"""
from __future__ import annotations

import math
from typing import IO, Iterable, Iterator, NamedTuple, Sequence

import numpy as np

#: Sentinel label for unreachable vertices.  Compares greater than every int.
INFINITY = math.inf

#: Largest finite label; relaxations that exceed it raise :class:`LabelOverflowError`.
LABEL_MAX = 2**64 - 1


class LabelOverflowError(OverflowError):
    """A path length no longer fits in an unsigned 64-bit label."""


class GraphFormatError(ValueError):
    """Malformed graph file.  ``lineno`` is 1-based (0 when not line-specific)."""

    def __init__(self, lineno: int, message: str):
        self.lineno = lineno
        prefix = f"line {lineno}: " if lineno else ""
        super().__init__(prefix + message)


class Neighbour(NamedTuple):
    vertex: int
    weight: int


class Graph:
    """Frozen adjacency-list digraph with nonnegative integer arc weights."""

    __slots__ = ("n", "m", "heads", "weights")

    n: int
    m: int
    heads: tuple[tuple[int, ...], ...]
    weights: tuple[tuple[int, ...], ...]

    def __init__(self, n, heads, weights):
        # Trusted constructor; use GraphBuilder or Graph.from_csr for validation.
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "heads", heads)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "m", sum(map(len, heads)))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __delattr__(self, name):
        raise AttributeError("Graph is immutable")

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n, self.heads, self.weights) == (other.n, other.heads, other.weights)

    def __hash__(self):
        return hash((self.n, self.m))

    def neighbours(self, u: int) -> list[Neighbour]:
        return [Neighbour(v, w) for v, w in zip(self.heads[u], self.weights[u])]

    @property
    def adj(self) -> list[list[Neighbour]]:
        return [self.neighbours(u) for u in range(self.n)]

    def arcs(self) -> Iterator[tuple[int, int, int]]:
        """Yield ``(u, v, w)`` for every arc, grouped by tail in insertion order."""
        for u in range(self.n):
            for v, w in zip(self.heads[u], self.weights[u]):
                yield u, v, w

    def max_weight(self) -> int:
        return max((max(ws) for ws in self.weights if ws), default=0)

    @classmethod
    def from_csr(cls, n: int, offsets, targets, weights) -> "Graph":
        """Build from compressed-sparse-row arrays, validating them in bulk.

        ``targets[offsets[u]:offsets[u+1]]`` are the heads of the arcs leaving
        ``u``.  Integer objects are shared between lists to keep large dense
        graphs compact.
        """
        offsets = np.asarray(offsets, dtype=np.int64)
        targets = np.asarray(targets, dtype=np.int64)
        weights = np.asarray(weights, dtype=np.int64)
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        if offsets.shape != (n + 1,) or offsets[0] != 0 or np.any(np.diff(offsets) < 0):
            raise ValueError("offsets must be a nondecreasing array of length n+1 starting at 0")
        if targets.shape != weights.shape or targets.shape[0] != offsets[-1]:
            raise ValueError("targets/weights length does not match offsets")
        if targets.size:
            if targets.min() < 0 or targets.max() >= n:
                raise ValueError("arc head out of range")
            if weights.min() < 0:
                raise ValueError("negative weights unsupported; use the Bellman-Ford oracle")
        vertex_pool = np.array(list(range(n)), dtype=object) if n else np.empty(0, dtype=object)
        wmax = int(weights.max()) if weights.size else 0
        weight_pool = np.array(list(range(wmax + 1)), dtype=object) if wmax <= 1 << 20 else None
        heads = []
        ws = []
        bounds = offsets.tolist()
        for u in range(n):
            lo, hi = bounds[u], bounds[u + 1]
            heads.append(tuple(vertex_pool[targets[lo:hi]].tolist()))
            if weight_pool is not None:
                ws.append(tuple(weight_pool[weights[lo:hi]].tolist()))
            else:
                ws.append(tuple(weights[lo:hi].tolist()))
        return cls(n, tuple(heads), tuple(ws))


class GraphBuilder:
    """Mutable staging area for a :class:`Graph`.  Single owner, single use."""

    def __init__(self, n: int):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        self.n = n
        self.m = 0
        self._heads: list[list[int]] = [[] for _ in range(n)]
        self._weights: list[list[int]] = [[] for _ in range(n)]
        self._built = False

    def _check_vertex(self, x, name):
        if not isinstance(x, (int, np.integer)) or isinstance(x, bool) or not 0 <= x < self.n:
            raise ValueError(f"vertex {name}={x!r} out of range [0, {self.n})")

    def add_arc(self, u: int, v: int, w: int) -> None:
        if self._built:
            raise RuntimeError("builder already finalized")
        self._check_vertex(u, "u")
        self._check_vertex(v, "v")
        if not isinstance(w, (int, np.integer)) or isinstance(w, bool):
            raise TypeError(f"arc weight must be an integer, got {w!r}")
        if w < 0:
            raise ValueError(f"negative weights unsupported; use the Bellman-Ford oracle (w={w})")
        if w > LABEL_MAX:
            raise ValueError(f"arc weight {w} exceeds the 64-bit label range")
        self._heads[u].append(int(v))
        self._weights[u].append(int(w))
        self.m += 1

    def add_edge(self, u: int, v: int, w: int) -> None:
        """Add the arcs ``(u, v)`` and ``(v, u)``, both of weight ``w``."""
        self.add_arc(u, v, w)
        self.add_arc(v, u, w)

    def build(self) -> Graph:
        if self._built:
            raise RuntimeError("builder already finalized")
        self._built = True
        g = Graph(self.n, tuple(map(tuple, self._heads)), tuple(map(tuple, self._weights)))
        self._heads = self._weights = []
        return g


def new_graph(n: int) -> GraphBuilder:
    return GraphBuilder(n)


def graph_from_arcs(n: int, arcs: Iterable[Sequence[int]]) -> Graph:
    b = GraphBuilder(n)
    for u, v, w in arcs:
        b.add_arc(u, v, w)
    return b.build()


def _parse_int(token: str, lineno: int, what: str) -> int:
    if not token.isdigit() or not token.isascii():
        raise GraphFormatError(lineno, f"{what} must be a nonnegative decimal integer, got {token!r}")
    return int(token)


def read_graph(stream: IO[str] | Iterable[str]) -> Graph:
    """Parse the text format from an open text stream (or any iterable of lines)."""
    builder = None
    expected_m = 0
    for lineno, raw in enumerate(stream, start=1):
        line = raw[:-1] if raw.endswith("\n") else raw
        if line.startswith("c"):
            continue
        fields = line.split(" ")
        tag = fields[0]
        if tag == "p":
            if builder is not None:
                raise GraphFormatError(lineno, "duplicate header line")
            if len(fields) != 4 or fields[1] != "sp":
                raise GraphFormatError(lineno, f"malformed header {line!r}, expected 'p sp <n> <m>'")
            n = _parse_int(fields[2], lineno, "vertex count")
            expected_m = _parse_int(fields[3], lineno, "arc count")
            builder = GraphBuilder(n)
        elif tag == "a":
            if builder is None:
                raise GraphFormatError(lineno, "arc line before header")
            if len(fields) != 4:
                raise GraphFormatError(lineno, f"malformed arc line {line!r}, expected 'a <u> <v> <w>'")
            u = _parse_int(fields[1], lineno, "tail")
            v = _parse_int(fields[2], lineno, "head")
            w = _parse_int(fields[3], lineno, "weight")
            if builder.m >= expected_m:
                raise GraphFormatError(lineno, f"more arc lines than the {expected_m} declared")
            if u >= builder.n or v >= builder.n:
                raise GraphFormatError(lineno, f"vertex out of range [0, {builder.n}) in {line!r}")
            builder.add_arc(u, v, w)
        else:
            raise GraphFormatError(lineno, f"unrecognized line {line!r}")
    if builder is None:
        raise GraphFormatError(0, "missing 'p sp <n> <m>' header")
    if builder.m != expected_m:
        raise GraphFormatError(0, f"header declares {expected_m} arcs but {builder.m} were read")
    return builder.build()


def write_graph(graph: Graph, stream: IO[str], comments: Iterable[str] = ()) -> None:
    for text in comments:
        stream.write(f"c {text}\n" if text else "c\n")
    stream.write(f"p sp {graph.n} {graph.m}\n")
    write = stream.write
    for u in range(graph.n):
        for v, w in zip(graph.heads[u], graph.weights[u]):
            write(f"a {u} {v} {w}\n")


def load_graph(path) -> Graph:
    with open(path, encoding="ascii") as fh:
        return read_graph(fh)


def save_graph(graph: Graph, path, comments: Iterable[str] = ()) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        write_graph(graph, fh, comments)
