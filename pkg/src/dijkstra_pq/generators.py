"""Seeded benchmark topologies: Delaunay planar graphs and G(n, p) digraphs.

Both generators are pure functions of their config.  Every random draw comes
from :mod:`dijkstra_pq.rng` at a fixed counter, so a config reproduces the
same graph bit for bit on any platform.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import rng
from .delaunay import BowyerWatson
from .graph import Graph

_ROW_BLOCK_PAIRS = 1 << 22


@dataclass(frozen=True)
class PlanarConfig:
    n: int
    side: float = 10_000.0
    seed: int = 0

    def __post_init__(self):
        if self.n < 3:
            raise ValueError(f"planar graphs need n >= 3, got {self.n}")
        if not self.side > 0:
            raise ValueError(f"side must be positive, got {self.side}")

    def comment(self) -> str:
        return f"generator: topology=planar n={self.n} side={self.side!r} seed={self.seed}"


@dataclass(frozen=True)
class RandomConfig:
    n: int
    p: float
    w_max: int = 10_000
    seed: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"n must be nonnegative, got {self.n}")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"p must lie in [0, 1], got {self.p}")
        if self.w_max < 1:
            raise ValueError(f"w_max must be at least 1, got {self.w_max}")

    def comment(self) -> str:
        return f"generator: topology=random n={self.n} p={self.p!r} wmax={self.w_max} seed={self.seed}"


def planar_points(cfg: PlanarConfig) -> tuple[np.ndarray, np.ndarray]:
    """Distinct points uniform in ``[0, side)^2``.

    Point i uses counters ``2i`` and ``2i+1``.  A point that repeats an earlier
    one is redrawn from counters past ``2n`` until it is distinct.
    """
    n = cfg.n
    u = rng.uniform(cfg.seed, np.arange(2 * n, dtype=np.uint64))
    xs = u[0::2] * cfg.side
    ys = u[1::2] * cfg.side
    seen = set()
    counter = 2 * n
    for i in range(n):
        key = (xs[i], ys[i])
        while key in seen:
            x, y = rng.uniform(cfg.seed, [counter, counter + 1]) * cfg.side
            counter += 2
            xs[i], ys[i] = x, y
            key = (x, y)
        seen.add(key)
    return xs, ys


def euclidean_weights(xs, ys, edges: np.ndarray) -> np.ndarray:
    """Edge lengths rounded half-up to integers, never below 1."""
    d = np.hypot(xs[edges[:, 0]] - xs[edges[:, 1]], ys[edges[:, 0]] - ys[edges[:, 1]])
    return np.maximum(np.floor(d + 0.5), 1).astype(np.int64)


def _symmetric_graph(n: int, edges: np.ndarray, weights: np.ndarray) -> Graph:
    tails = np.concatenate([edges[:, 0], edges[:, 1]])
    heads = np.concatenate([edges[:, 1], edges[:, 0]])
    ws = np.concatenate([weights, weights])
    order = np.lexsort((heads, tails))
    tails, heads, ws = tails[order], heads[order], ws[order]
    offsets = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(tails, minlength=n), out=offsets[1:])
    return Graph.from_csr(n, offsets, heads, ws)


def generate_planar(cfg: PlanarConfig, *, return_points: bool = False):
    """Delaunay graph on random points; each triangulation edge becomes two arcs.

    Arcs leave each vertex in increasing order of head.  With
    ``return_points=True`` the coordinates are returned as well.
    """
    xs, ys = planar_points(cfg)
    edges = BowyerWatson(xs, ys).run().edges()
    graph = _symmetric_graph(cfg.n, edges, euclidean_weights(xs, ys, edges))
    if return_points:
        return graph, xs, ys
    return graph


def generate_random(cfg: RandomConfig) -> Graph:
    """G(n, p) digraph with weights uniform on ``1..w_max``.

    Ordered pairs are enumerated row-major (``u`` outer, ``v`` inner, skipping
    ``v == u``).  Pair number ``k`` decides inclusion with counter ``2k`` and
    draws its weight with counter ``2k+1``.
    """
    n, p = cfg.n, cfg.p
    row = n - 1
    if n < 2 or p == 0.0:
        return Graph.from_csr(n, np.zeros(n + 1, dtype=np.int64), [], [])
    heads_parts, weight_parts, counts = [], [], np.zeros(n, dtype=np.int64)
    rows_per_block = max(1, _ROW_BLOCK_PAIRS // row)
    for u0 in range(0, n, rows_per_block):
        u1 = min(n, u0 + rows_per_block)
        k = np.arange(u0 * row, u1 * row, dtype=np.uint64)
        keep = rng.uniform(cfg.seed, 2 * k) < p
        k = k[keep]
        u = (k // np.uint64(row)).astype(np.int64)
        j = (k % np.uint64(row)).astype(np.int64)
        heads_parts.append(j + (j >= u))
        weight_parts.append(rng.uniform_int(cfg.seed, 2 * k + np.uint64(1), 1, cfg.w_max))
        counts[u0:u1] = np.bincount(u - u0, minlength=u1 - u0)
    offsets = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(counts, out=offsets[1:])
    return Graph.from_csr(n, offsets, np.concatenate(heads_parts), np.concatenate(weight_parts))
