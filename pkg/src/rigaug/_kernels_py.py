"""Pure-Python hot kernels.

This module mirrors ``_kernels.pyx`` line for line.  It is used when the
compiled extension is unavailable or when ``RIGAUG_PURE=1`` is set.
"""
from __future__ import annotations

from collections import deque

__all__ = ["PebbleGame", "disjoint_paths"]


class PebbleGame:
    """(2,3)-pebble game on ``n`` vertices.

    Every vertex starts with two pebbles.  An accepted edge is oriented
    away from the vertex whose pebble covers it, so at all times
    ``outdeg(v) + pebbles(v) == 2``.  An edge ``uv`` is independent of the
    accepted set iff four pebbles can be gathered on ``{u, v}``.
    """

    __slots__ = ("n", "peb", "out", "accepted")

    def __init__(self, n):
        self.n = n
        self.peb = [2] * n
        self.out = [[] for _ in range(n)]
        self.accepted = 0

    def copy(self):
        other = PebbleGame.__new__(PebbleGame)
        other.n = self.n
        other.peb = list(self.peb)
        other.out = [list(o) for o in self.out]
        other.accepted = self.accepted
        return other

    def _fetch(self, start, u, v):
        # DFS along out-arcs for a free pebble outside {u, v}; reverse the path.
        parent = {start: -1}
        stack = [start]
        found = -1
        while stack:
            x = stack.pop()
            for y in self.out[x]:
                if y in parent:
                    continue
                parent[y] = x
                if y != u and y != v and self.peb[y] > 0:
                    found = y
                    break
                stack.append(y)
            if found >= 0:
                break
        if found < 0:
            return False
        y = found
        while parent[y] != -1:
            x = parent[y]
            self.out[x].remove(y)
            self.out[y].append(x)
            y = x
        self.peb[found] -= 1
        self.peb[start] += 1
        return True

    def _gather(self, u, v):
        while self.peb[u] < 2 and self._fetch(u, u, v):
            pass
        while self.peb[v] < 2 and self._fetch(v, u, v):
            pass
        return self.peb[u] + self.peb[v]

    def is_independent(self, u, v):
        """Whether ``uv`` is independent of the accepted edges (no insertion)."""
        return self._gather(u, v) == 4

    def add_edge(self, u, v):
        """Insert ``uv`` if it is independent; return whether it was accepted."""
        if self._gather(u, v) != 4:
            return False
        self.peb[u] -= 1
        self.out[u].append(v)
        self.accepted += 1
        return True

    def reach(self, u, v):
        """Sorted vertices reachable from ``u`` or ``v`` along out-arcs."""
        seen = {u, v}
        stack = [u, v]
        while stack:
            x = stack.pop()
            for y in self.out[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return sorted(seen)


def disjoint_paths(n, adj, s, t, limit):
    """Maximum number of internally vertex-disjoint s-t paths, capped at ``limit``.

    ``adj`` is a list of neighbour lists.  A direct edge ``st`` counts as one
    path.  Unit-capacity augmenting paths on the vertex-split network.
    """
    # node 2x is x_in, 2x+1 is x_out; arcs stored as parallel lists
    head, cap, nxt = [], [], []
    first = [-1] * (2 * n)

    def arc(a, b, c):
        for x, y, cc in ((a, b, c), (b, a, 0)):
            head.append(y)
            cap.append(cc)
            nxt.append(first[x])
            first[x] = len(head) - 1

    big = n + 1
    for x in range(n):
        arc(2 * x, 2 * x + 1, big if x == s or x == t else 1)
    for x in range(n):
        for y in adj[x]:
            arc(2 * x + 1, 2 * y, 1)
    src, dst = 2 * s + 1, 2 * t
    flow = 0
    while flow < limit:
        prev = [-1] * (2 * n)
        prev[src] = -2
        queue = deque([src])
        while queue and prev[dst] == -1:
            x = queue.popleft()
            e = first[x]
            while e != -1:
                y = head[e]
                if cap[e] > 0 and prev[y] == -1:
                    prev[y] = e
                    queue.append(y)
                e = nxt[e]
        if prev[dst] == -1:
            break
        y = dst
        while y != src:
            e = prev[y]
            cap[e] -= 1
            cap[e ^ 1] += 1
            y = head[e ^ 1]
        flow += 1
    return flow
