# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled hot kernels: the (2,3)-pebble game and unit-capacity vertex flow.

Same interface and semantics as ``_kernels_py``.
"""
from cpython.mem cimport PyMem_Malloc, PyMem_Free


cdef class PebbleGame:
    cdef public int n
    cdef public int accepted
    cdef int *peb
    cdef int *out      # out[2x], out[2x+1]; -1 when empty
    cdef int *parent
    cdef int *stack

    def __cinit__(self, int n):
        cdef int i
        self.n = n
        self.accepted = 0
        cdef int size = n if n > 0 else 1
        self.peb = <int *> PyMem_Malloc(size * sizeof(int))
        self.out = <int *> PyMem_Malloc(2 * size * sizeof(int))
        self.parent = <int *> PyMem_Malloc(size * sizeof(int))
        self.stack = <int *> PyMem_Malloc(size * sizeof(int))
        if not self.peb or not self.out or not self.parent or not self.stack:
            raise MemoryError()
        for i in range(n):
            self.peb[i] = 2
            self.out[2 * i] = -1
            self.out[2 * i + 1] = -1

    def __dealloc__(self):
        PyMem_Free(self.peb)
        PyMem_Free(self.out)
        PyMem_Free(self.parent)
        PyMem_Free(self.stack)

    def copy(self):
        cdef PebbleGame other = PebbleGame(self.n)
        cdef int i
        for i in range(self.n):
            other.peb[i] = self.peb[i]
            other.out[2 * i] = self.out[2 * i]
            other.out[2 * i + 1] = self.out[2 * i + 1]
        other.accepted = self.accepted
        return other

    property peb_list:
        def __get__(self):
            return [self.peb[i] for i in range(self.n)]

    cdef inline void _del_out(self, int x, int y):
        if self.out[2 * x] == y:
            self.out[2 * x] = self.out[2 * x + 1]
        self.out[2 * x + 1] = -1

    cdef inline void _add_out(self, int x, int y):
        if self.out[2 * x] == -1:
            self.out[2 * x] = y
        else:
            self.out[2 * x + 1] = y

    cdef bint _fetch(self, int start, int u, int v):
        cdef int i, x, y, k, top = 0, found = -1
        for i in range(self.n):
            self.parent[i] = -2
        self.parent[start] = -1
        self.stack[top] = start
        top += 1
        while top > 0 and found < 0:
            top -= 1
            x = self.stack[top]
            for k in range(2):
                y = self.out[2 * x + k]
                if y < 0 or self.parent[y] != -2:
                    continue
                self.parent[y] = x
                if y != u and y != v and self.peb[y] > 0:
                    found = y
                    break
                self.stack[top] = y
                top += 1
        if found < 0:
            return False
        y = found
        while self.parent[y] != -1:
            x = self.parent[y]
            self._del_out(x, y)
            self._add_out(y, x)
            y = x
        self.peb[found] -= 1
        self.peb[start] += 1
        return True

    cdef int _gather(self, int u, int v):
        while self.peb[u] < 2 and self._fetch(u, u, v):
            pass
        while self.peb[v] < 2 and self._fetch(v, u, v):
            pass
        return self.peb[u] + self.peb[v]

    def is_independent(self, int u, int v):
        return self._gather(u, v) == 4

    def add_edge(self, int u, int v):
        if self._gather(u, v) != 4:
            return False
        self.peb[u] -= 1
        self._add_out(u, v)
        self.accepted += 1
        return True

    def reach(self, int u, int v):
        cdef int i, x, y, k, top = 0
        for i in range(self.n):
            self.parent[i] = 0
        self.parent[u] = 1
        self.parent[v] = 1
        self.stack[top] = u
        top += 1
        self.stack[top] = v
        top += 1
        while top > 0:
            top -= 1
            x = self.stack[top]
            for k in range(2):
                y = self.out[2 * x + k]
                if y >= 0 and self.parent[y] == 0:
                    self.parent[y] = 1
                    self.stack[top] = y
                    top += 1
        return [i for i in range(self.n) if self.parent[i]]


def disjoint_paths(int n, adj, int s, int t, int limit):
    cdef int nodes = 2 * n
    cdef int narcs = 2 * n
    cdef int x, y, e, flow = 0, qh, qt, src, dst, a, b, c
    for x in range(n):
        narcs += len(adj[x])
    narcs *= 2
    cdef int *head = <int *> PyMem_Malloc(narcs * sizeof(int))
    cdef int *cap = <int *> PyMem_Malloc(narcs * sizeof(int))
    cdef int *nxt = <int *> PyMem_Malloc(narcs * sizeof(int))
    cdef int *first = <int *> PyMem_Malloc(nodes * sizeof(int))
    cdef int *prev = <int *> PyMem_Malloc(nodes * sizeof(int))
    cdef int *queue = <int *> PyMem_Malloc(nodes * sizeof(int))
    cdef int m = 0
    try:
        for x in range(nodes):
            first[x] = -1
        for x in range(n):
            c = n + 1 if (x == s or x == t) else 1
            a = 2 * x
            b = 2 * x + 1
            head[m] = b; cap[m] = c; nxt[m] = first[a]; first[a] = m; m += 1
            head[m] = a; cap[m] = 0; nxt[m] = first[b]; first[b] = m; m += 1
        for x in range(n):
            for y in adj[x]:
                a = 2 * x + 1
                b = 2 * y
                head[m] = b; cap[m] = 1; nxt[m] = first[a]; first[a] = m; m += 1
                head[m] = a; cap[m] = 0; nxt[m] = first[b]; first[b] = m; m += 1
        src = 2 * s + 1
        dst = 2 * t
        while flow < limit:
            for x in range(nodes):
                prev[x] = -1
            prev[src] = -2
            qh = 0
            qt = 0
            queue[qt] = src
            qt += 1
            while qh < qt and prev[dst] == -1:
                x = queue[qh]
                qh += 1
                e = first[x]
                while e != -1:
                    y = head[e]
                    if cap[e] > 0 and prev[y] == -1:
                        prev[y] = e
                        queue[qt] = y
                        qt += 1
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
    finally:
        PyMem_Free(head)
        PyMem_Free(cap)
        PyMem_Free(nxt)
        PyMem_Free(first)
        PyMem_Free(prev)
        PyMem_Free(queue)
    return flow
