"""Independent reference checks shared by the test modules."""
from collections import deque
from fractions import Fraction

import numpy as np


def exact_orient(a, b, c):
    ax, ay, bx, by, cx, cy = map(Fraction, (*a, *b, *c))
    d = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
    return (d > 0) - (d < 0)


def circumcircle_strictly_contains(a, b, c, d):
    """Independent check: exact circumcentre, then squared distances."""
    (ax, ay), (bx, by), (cx, cy), (dx, dy) = [tuple(map(Fraction, p)) for p in (a, b, c, d)]
    den = 2 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))
    ux = ((ax * ax + ay * ay) * (by - cy) + (bx * bx + by * by) * (cy - ay) + (cx * cx + cy * cy) * (ay - by)) / den
    uy = ((ax * ax + ay * ay) * (cx - bx) + (bx * bx + by * by) * (ax - cx) + (cx * cx + cy * cy) * (bx - ax)) / den
    r2 = (ax - ux) ** 2 + (ay - uy) ** 2
    return (dx - ux) ** 2 + (dy - uy) ** 2 < r2


def empty_circle_violations(xs, ys, triangles):
    pts = list(zip(xs.tolist(), ys.tolist()))
    bad = []
    P = np.c_[xs, ys]
    for a, b, c in triangles:
        # Float prefilter, exact confirmation for anything near the circle.
        A, B, C = P[a], P[b], P[c]
        d = 2 * (A[0] * (B[1] - C[1]) + B[0] * (C[1] - A[1]) + C[0] * (A[1] - B[1]))
        ux = (A @ A * (B[1] - C[1]) + B @ B * (C[1] - A[1]) + C @ C * (A[1] - B[1])) / d
        uy = (A @ A * (C[0] - B[0]) + B @ B * (A[0] - C[0]) + C @ C * (B[0] - A[0])) / d
        r2 = (A[0] - ux) ** 2 + (A[1] - uy) ** 2
        dist2 = (P[:, 0] - ux) ** 2 + (P[:, 1] - uy) ** 2
        for q in np.nonzero(dist2 < r2 * (1 + 1e-6))[0]:
            if q not in (a, b, c) and circumcircle_strictly_contains(pts[a], pts[b], pts[c], pts[q]):
                bad.append(((a, b, c), int(q)))
    return bad


def is_connected(graph) -> bool:
    if graph.n == 0:
        return True
    seen = [False] * graph.n
    seen[0] = True
    todo = deque([0])
    while todo:
        u = todo.popleft()
        for v in graph.heads[u]:
            if not seen[v]:
                seen[v] = True
                todo.append(v)
    return all(seen)


def is_symmetric(graph) -> bool:
    arcs = sorted(graph.arcs())
    return arcs == sorted((v, u, w) for u, v, w in arcs)
