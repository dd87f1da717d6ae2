"""Incremental Bowyer-Watson Delaunay triangulation of distinct 2-D points.

The enclosing super-triangle is symbolic: a single vertex at infinity
(``GHOST``).  Every convex-hull edge ``a -> b`` is paired with a ghost
triangle ``(b, a, GHOST)``, whose circumcircle degenerates to the open
half-plane beyond the edge (plus the open edge itself).  This behaves like an
infinitely large super-triangle, so no hull edge is lost when the ghosts are
discarded at the end.

Predicates use a floating-point filter with Shewchuk's static error bounds and
fall back to exact rational arithmetic.  A point lying exactly on a
circumcircle does not conflict with that triangle: among cocircular
configurations the earlier-inserted triangulation is kept.
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np

GHOST = -1

_EPS = 2.0**-53
_CCW_BOUND = (3.0 + 16.0 * _EPS) * _EPS
_ICC_BOUND = (10.0 + 96.0 * _EPS) * _EPS


def _orient_exact(ax, ay, bx, by, cx, cy):
    ax, ay, bx, by, cx, cy = map(Fraction, (ax, ay, bx, by, cx, cy))
    det = (ax - cx) * (by - cy) - (ay - cy) * (bx - cx)
    return (det > 0) - (det < 0)


def orient(ax, ay, bx, by, cx, cy) -> int:
    """+1 if a, b, c turn counter-clockwise, -1 if clockwise, 0 if collinear."""
    detleft = (ax - cx) * (by - cy)
    detright = (ay - cy) * (bx - cx)
    det = detleft - detright
    bound = _CCW_BOUND * (abs(detleft) + abs(detright))
    if det > bound:
        return 1
    if -det > bound:
        return -1
    return _orient_exact(ax, ay, bx, by, cx, cy)


def _incircle_exact(ax, ay, bx, by, cx, cy, dx, dy):
    ax, ay, bx, by, cx, cy, dx, dy = map(Fraction, (ax, ay, bx, by, cx, cy, dx, dy))
    adx, ady, bdx, bdy, cdx, cdy = ax - dx, ay - dy, bx - dx, by - dy, cx - dx, cy - dy
    det = ((adx * adx + ady * ady) * (bdx * cdy - cdx * bdy)
           + (bdx * bdx + bdy * bdy) * (cdx * ady - adx * cdy)
           + (cdx * cdx + cdy * cdy) * (adx * bdy - bdx * ady))
    return (det > 0) - (det < 0)


def incircle(ax, ay, bx, by, cx, cy, dx, dy) -> int:
    """+1 if d is strictly inside the circle through CCW a, b, c; -1 outside; 0 on it."""
    adx = ax - dx
    ady = ay - dy
    bdx = bx - dx
    bdy = by - dy
    cdx = cx - dx
    cdy = cy - dy
    bdxcdy = bdx * cdy
    cdxbdy = cdx * bdy
    cdxady = cdx * ady
    adxcdy = adx * cdy
    adxbdy = adx * bdy
    bdxady = bdx * ady
    alift = adx * adx + ady * ady
    blift = bdx * bdx + bdy * bdy
    clift = cdx * cdx + cdy * cdy
    det = alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) + clift * (adxbdy - bdxady)
    permanent = ((abs(bdxcdy) + abs(cdxbdy)) * alift
                 + (abs(cdxady) + abs(adxcdy)) * blift
                 + (abs(adxbdy) + abs(bdxady)) * clift)
    bound = _ICC_BOUND * permanent
    if det > bound:
        return 1
    if -det > bound:
        return -1
    return _incircle_exact(ax, ay, bx, by, cx, cy, dx, dy)


def hilbert_order(xs: np.ndarray, ys: np.ndarray, bits: int = 16) -> np.ndarray:
    """Indices sorting the points along a Hilbert curve over their bounding box."""
    side = (1 << bits) - 1
    span = max(float(np.ptp(xs)), float(np.ptp(ys))) or 1.0
    x = ((xs - xs.min()) * (side / span)).astype(np.int64)
    y = ((ys - ys.min()) * (side / span)).astype(np.int64)
    d = np.zeros(len(xs), dtype=np.int64)
    s = 1 << (bits - 1)
    while s > 0:
        rx = (x & s) > 0
        ry = (y & s) > 0
        d += s * s * ((3 * rx.astype(np.int64)) ^ ry.astype(np.int64))
        flip = ~ry & rx
        x = np.where(flip, side - x, x)
        y = np.where(flip, side - y, y)
        swap = ~ry
        x, y = np.where(swap, y, x), np.where(swap, x, y)
        s >>= 1
    return np.argsort(d, kind="stable")


class BowyerWatson:
    """Delaunay triangulation built by inserting points one at a time.

    Triangles live in flat lists: vertices ``verts[3t:3t+3]`` in
    counter-clockwise order and ``nbrs[3t+k]``, the triangle across the edge
    opposite ``verts[3t+k]``.  Slots of deleted triangles are recycled.
    """

    def __init__(self, xs, ys):
        self.xs = [float(v) for v in xs]
        self.ys = [float(v) for v in ys]
        if len(self.xs) != len(self.ys):
            raise ValueError("coordinate arrays differ in length")
        self.verts: list[int] = []
        self.nbrs: list[int] = []
        self.alive: list[bool] = []
        self._stamp: list[int] = []
        self._free: list[int] = []
        self._tick = 0
        self._last = -1
        self.inserted = 0

    # -- triangle storage ------------------------------------------------
    def _new(self, a, b, c):
        if self._free:
            t = self._free.pop()
            self.verts[3 * t:3 * t + 3] = (a, b, c)
            self.alive[t] = True
        else:
            t = len(self.alive)
            self.verts.extend((a, b, c))
            self.nbrs.extend((-1, -1, -1))
            self.alive.append(True)
            self._stamp.append(0)
        return t

    def _kill(self, t):
        self.alive[t] = False
        self._free.append(t)

    # -- predicates on stored triangles --------------------------------------
    def _conflict(self, t, px, py):
        """Does point p lie strictly inside the (generalized) circumcircle of t?"""
        a, b, c = self.verts[3 * t:3 * t + 3]
        xs, ys = self.xs, self.ys
        if a == GHOST:
            a, b = b, c
        elif b == GHOST:
            a, b = c, a
        elif c != GHOST:
            return incircle(xs[a], ys[a], xs[b], ys[b], xs[c], ys[c], px, py) > 0
        ax, ay, bx, by = xs[a], ys[a], xs[b], ys[b]
        o = orient(ax, ay, bx, by, px, py)
        if o:
            return o > 0
        # Collinear with the hull edge: conflict only on the open segment.
        return (min(ax, bx) < px < max(ax, bx)) or (ax == bx and min(ay, by) < py < max(ay, by))

    # -- construction ------------------------------------------------------
    def _start(self, order):
        xs, ys = self.xs, self.ys
        a, b = order[0], order[1]
        if xs[a] == xs[b] and ys[a] == ys[b]:
            raise ValueError(f"duplicate points {a} and {b}")
        for i in range(2, len(order)):
            c = order[i]
            o = orient(xs[a], ys[a], xs[b], ys[b], xs[c], ys[c])
            if o:
                break
        else:
            raise ValueError("all points are collinear; no triangulation exists")
        if o < 0:
            a, b = b, a
        tris = [(a, b, c), (b, a, GHOST), (c, b, GHOST), (a, c, GHOST)]
        ids = [self._new(*tri) for tri in tris]
        edge_owner = {}
        for t, tri in zip(ids, tris):
            for k in range(3):
                edge_owner[(tri[(k + 1) % 3], tri[(k + 2) % 3])] = (t, k)
        for (u, v), (t, k) in edge_owner.items():
            self.nbrs[3 * t + k] = edge_owner[(v, u)][0]
        self._last = ids[0]
        self.inserted = 3
        return [p for p in order if p not in (a, b, c)]

    def _locate(self, px, py):
        """Walk from the last real triangle to one whose circumcircle contains p."""
        verts, nbrs, xs, ys = self.verts, self.nbrs, self.xs, self.ys
        t = self._last
        steps = 0
        limit = 4 * len(self.alive) + 16
        while True:
            a, b, c = verts[3 * t:3 * t + 3]
            if a == GHOST or b == GHOST or c == GHOST:
                return t
            ax, ay, bx, by, cx, cy = xs[a], ys[a], xs[b], ys[b], xs[c], ys[c]
            if orient(bx, by, cx, cy, px, py) < 0:
                t = nbrs[3 * t]
            elif orient(cx, cy, ax, ay, px, py) < 0:
                t = nbrs[3 * t + 1]
            elif orient(ax, ay, bx, by, px, py) < 0:
                t = nbrs[3 * t + 2]
            else:
                return t
            steps += 1
            if steps > limit:  # pragma: no cover - visibility walks terminate on Delaunay meshes
                return next(s for s in range(len(self.alive))
                            if self.alive[s] and self._conflict(s, px, py))

    def insert(self, p: int) -> None:
        xs, ys, verts, nbrs, stamp = self.xs, self.ys, self.verts, self.nbrs, self._stamp
        px, py = xs[p], ys[p]
        seed = self._locate(px, py)
        if not self._conflict(seed, px, py):
            raise ValueError(f"point {p} duplicates an existing vertex")
        self._tick += 1
        tick = self._tick
        stamp[seed] = tick
        cavity = [seed]
        boundary = []
        i = 0
        while i < len(cavity):
            t = cavity[i]
            i += 1
            for k in range(3):
                nb = nbrs[3 * t + k]
                if stamp[nb] == tick:
                    continue
                if self._conflict(nb, px, py):
                    stamp[nb] = tick
                    cavity.append(nb)
                else:
                    boundary.append((t, k, nb))
        first = {}
        created = []
        for t, k, nb in boundary:
            x = verts[3 * t + (k + 1) % 3]
            y = verts[3 * t + (k + 2) % 3]
            new = self._new(x, y, p)
            nbrs[3 * new + 2] = nb
            base = 3 * nb
            for j in range(3):
                if nbrs[base + j] == t:
                    nbrs[base + j] = new
                    break
            first[x] = new
            created.append((new, y))
        # Recycle only after the fan is built: boundary entries still read cavity slots.
        for t in cavity:
            self._kill(t)
        last = -1
        for new, y in created:
            other = first[y]
            nbrs[3 * new] = other
            nbrs[3 * other + 1] = new
            if last < 0 and verts[3 * new] != GHOST and verts[3 * new + 1] != GHOST:
                last = new
        self._last = last
        self.inserted += 1

    def run(self, order=None) -> "BowyerWatson":
        n = len(self.xs)
        if n < 3:
            raise ValueError(f"need at least 3 points, got {n}")
        if order is None:
            order = hilbert_order(np.asarray(self.xs), np.asarray(self.ys)).tolist()
        rest = self._start(list(order))
        insert = self.insert
        for p in rest:
            insert(p)
        return self

    # -- results -------------------------------------------------------------
    def triangles(self) -> list[tuple[int, int, int]]:
        """Real triangles as counter-clockwise vertex triples."""
        out = []
        v = self.verts
        for t, ok in enumerate(self.alive):
            if ok:
                a, b, c = v[3 * t:3 * t + 3]
                if a != GHOST and b != GHOST and c != GHOST:
                    out.append((a, b, c))
        return out

    def edges(self) -> np.ndarray:
        """Undirected edges as an ``(E, 2)`` array of ``(u, v)``, ``u < v``, sorted."""
        tri = np.array(self.triangles(), dtype=np.int64).reshape(-1, 3)
        e = np.concatenate([tri[:, [0, 1]], tri[:, [1, 2]], tri[:, [2, 0]]])
        e.sort(axis=1)
        return np.unique(e, axis=0)


def delaunay(xs, ys) -> BowyerWatson:
    return BowyerWatson(xs, ys).run()
