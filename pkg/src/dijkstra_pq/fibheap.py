"""Fibonacci heap keyed by integer labels and addressed by vertex index.

The heap owns a dense handle table with one slot per vertex ``0 .. capacity-1``
so :meth:`FibHeap.decrease_key` finds a vertex's node in O(1).  A vertex can
hold at most one live node; its slot is cleared when the node is extracted.

Amortized costs: insert O(1), decrease_key O(1), extract_min O(log n).
"""
from __future__ import annotations

import math

PHI = (1 + 5**0.5) / 2


class FibNode:
    __slots__ = ("key", "vertex", "degree", "mark", "parent", "child", "left", "right")

    def __init__(self, vertex: int, key: int):
        self.key = key
        self.vertex = vertex
        self.degree = 0
        self.mark = False
        self.parent = None
        self.child = None
        self.left = self
        self.right = self

    def __repr__(self):
        return f"FibNode(vertex={self.vertex}, key={self.key}, degree={self.degree})"


class FibHeap:
    """Min-heap of ``(key, vertex)`` entries with O(1) amortized decrease-key."""

    def __init__(self, capacity: int):
        self.min: FibNode | None = None
        self.count = 0
        self._handles: list[FibNode | None] = [None] * capacity

    def __len__(self):
        return self.count

    def __bool__(self):
        return self.count > 0

    def __contains__(self, vertex):
        return 0 <= vertex < len(self._handles) and self._handles[vertex] is not None

    def size(self) -> int:
        return self.count

    def is_empty(self) -> bool:
        return self.count == 0

    @property
    def capacity(self) -> int:
        return len(self._handles)

    def key_of(self, vertex: int) -> int:
        node = self._handles[vertex]
        if node is None or node.vertex != vertex:
            raise KeyError(f"vertex {vertex} is not in the heap")
        return node.key

    def peek(self) -> tuple[int, int]:
        """``(vertex, key)`` of the minimum without removing it."""
        if self.min is None:
            raise IndexError("peek at an empty heap")
        return self.min.vertex, self.min.key

    def insert(self, vertex: int, key: int) -> None:
        if vertex < 0:
            raise IndexError(f"vertex {vertex} is negative")
        if self._handles[vertex] is not None:
            raise ValueError(f"vertex {vertex} already has a live node")
        node = FibNode(vertex, key)
        self._handles[vertex] = node
        self._splice_to_root(node)
        self.count += 1

    def extract_min(self) -> tuple[int, int]:
        """Remove the minimum node and return its ``(vertex, key)``."""
        z = self.min
        if z is None:
            raise IndexError("extract_min from an empty heap")
        child = z.child
        if child is not None:
            x = child
            while True:
                x.parent = None
                x.mark = False
                x = x.right
                if x is child:
                    break
            # Concatenate the child ring into the root ring right after z.
            z_right = z.right
            child_left = child.left
            z.right = child
            child.left = z
            child_left.right = z_right
            z_right.left = child_left
            z.child = None
            z.degree = 0
        if z.right is z:
            self.min = None
        else:
            z.left.right = z.right
            z.right.left = z.left
            self.min = z.right
            self._consolidate()
        z.left = z.right = z
        self.count -= 1
        self._handles[z.vertex] = None
        return z.vertex, z.key

    def decrease_key(self, vertex: int, new_key: int) -> None:
        """Lower ``vertex``'s key to ``new_key``; a larger key is silently ignored."""
        node = self._handles[vertex]
        if node is None or node.vertex != vertex:
            raise KeyError(f"vertex {vertex} is not in the heap")
        if new_key > node.key:
            return
        node.key = new_key
        parent = node.parent
        if parent is not None and new_key < parent.key:
            self._cut(node, parent)
            self._cascading_cut(parent)
        if new_key < self.min.key:
            self.min = node

    # -- internal procedures ---------------------------------------------------
    def _splice_to_root(self, node: FibNode) -> None:
        """Put a detached node into the root ring, left of min, updating min."""
        node.parent = None
        node.mark = False
        m = self.min
        if m is None:
            node.left = node.right = node
            self.min = node
            return
        left = m.left
        m.left = node
        node.right = m
        node.left = left
        left.right = node
        if node.key < m.key:
            self.min = node

    @staticmethod
    def _remove_from_ring(node: FibNode) -> None:
        """Unlink a node from its sibling ring, fixing its parent's child/degree."""
        parent = node.parent
        if parent is not None:
            if parent.degree == 1:
                parent.child = None
            elif parent.child is node:
                parent.child = node.right
            parent.degree -= 1
        node.right.left = node.left
        node.left.right = node.right
        node.left = node.right = node

    def _cut(self, node: FibNode, parent: FibNode) -> None:
        self._remove_from_ring(node)
        self._splice_to_root(node)

    def _cascading_cut(self, node: FibNode) -> None:
        # Iterative form: a recursive walk can hit the interpreter's depth limit.
        parent = node.parent
        while parent is not None:
            if not node.mark:
                node.mark = True
                return
            self._cut(node, parent)
            node = parent
            parent = node.parent

    @staticmethod
    def _add_child(parent: FibNode, node: FibNode) -> None:
        child = parent.child
        if child is None:
            parent.child = node
            node.left = node.right = node
        else:
            left = child.left
            child.left = node
            node.right = child
            node.left = left
            left.right = node
        node.parent = parent
        parent.degree += 1

    def _link(self, high: FibNode, low: FibNode) -> None:
        """Make root ``high`` a child of root ``low``."""
        self._remove_from_ring(high)
        self._add_child(low, high)
        high.mark = False

    def _consolidate(self) -> None:
        roots = []
        start = x = self.min
        while True:
            roots.append(x)
            x = x.right
            if x is start:
                break
        table: list[FibNode | None] = [None] * (int(math.log(self.count, PHI)) + 2)
        for x in roots:
            d = x.degree
            while True:
                if d >= len(table):
                    table.extend([None] * (d + 1 - len(table)))
                y = table[d]
                if y is None:
                    table[d] = x
                    break
                # Ties keep the node being consolidated as the parent.
                if x.key > y.key:
                    x, y = y, x
                self._link(y, x)
                table[d] = None
                d += 1
        best = None
        for x in table:
            if x is not None and (best is None or x.key < best.key):
                best = x
        self.min = best

    # -- verification ------------------------------------------------------------
    def _diagnose(self, x: FibNode, parent, floor_key) -> None:
        """Raise the specific failure for a node that failed the combined test."""
        if not (x.left.right is x and x.right.left is x and x.parent is parent
                and self._handles[x.vertex] is x):
            raise AssertionError(f"broken links at {x}")
        if x.key < floor_key:
            raise AssertionError(f"heap order violated at {x}")
        if x.degree and x.child is None:
            raise AssertionError(f"{x} has degree but no child")
        if not x.degree and x.child is not None:
            raise AssertionError(f"{x} has a child but degree 0")
        raise AssertionError(f"root {x} is marked")

    def check_invariants(self) -> None:
        """Walk the whole heap and raise ``AssertionError`` on any violation.

        Checks heap order, sibling-ring links, degrees, parent pointers, root
        marks, the minimum pointer, the exact count, handle identity, and the
        degree bound (subtree size >= F(degree + 2), max degree <= log_phi(count)).
        """
        count = self.count
        if self.min is None:
            assert count == 0, f"empty root ring but count={count}"
            return
        assert count > 0, "non-empty root ring but count=0"
        handles = self._handles
        max_degree = 0
        # Nodes with children, with the index of their parent in this list
        # (-1 for roots).  Parents always precede their children.
        inner = []
        up = []
        min_key = self.min.key
        rings = [(self.min, None, -1, -1)]
        total = 0
        for start, parent, expected, pi in rings:
            is_root = parent is None
            floor_key = min_key if is_root else parent.key
            x = start
            length = 0
            for length in range(1, count + 1):
                # Checking x.right.left for every x of a closed ring covers the left links too.
                d = x.degree
                if not (x.right.left is x and x.parent is parent and handles[x.vertex] is x
                        and x.key >= floor_key and (d > 0) is (x.child is not None)
                        and not (is_root and x.mark)):
                    self._diagnose(x, parent, floor_key)
                if d:
                    rings.append((x.child, x, d, len(inner)))
                    if d > max_degree:
                        max_degree = d
                    inner.append(x)
                    up.append(pi)
                x = x.right
                if x is start:
                    break
            else:
                raise AssertionError("ring longer than count")
            assert expected < 0 or length == expected, f"{parent} has degree {expected} but {length} children"
            total += length
        assert total == count, f"count={count} but {total} reachable nodes"
        if max_degree >= 2:
            # Subtree size = 1 + degree + sum of (size - 1) over children that
            # have children.  A reverse sweep finishes children before parents.
            sizes = [1 + x.degree for x in inner]
            fib = _FIB
            for i in range(len(inner) - 1, -1, -1):
                size = sizes[i]
                assert size >= fib[inner[i].degree + 1], f"{inner[i]} subtree holds {size} nodes, too few for its degree"
                j = up[i]
                if j >= 0:
                    sizes[j] += size - 1
        cap = _DEGREE_CAP[count] if count < len(_DEGREE_CAP) else math.floor(math.log(count, PHI))
        assert max_degree <= cap, (
            f"max degree {max_degree} exceeds log_phi({count})")


def _fibonacci(k):
    seq = [1, 1]
    while len(seq) < k:
        seq.append(seq[-1] + seq[-2])
    return seq


# _FIB[i] is the (i+1)-th Fibonacci number; a degree-d node needs F(d+2) = _FIB[d+1] nodes.
_FIB = _fibonacci(100)

# _DEGREE_CAP[c] = floor(log_phi(c)) for small counts.
_DEGREE_CAP = [0, 0] + [math.floor(math.log(c, PHI)) for c in range(2, 1 << 12)]
