"""Independent ground-truth engines used by the test suites.

Nothing here calls the combinatorial algorithms being tested, except that
the augmentation searches use :func:`is_globally_rigid2` (or plain
connectivity) as their acceptance test.
"""
from __future__ import annotations

import heapq
import random
from collections import deque

from .costs import INF
from .errors import TooLarge
from .graph import Graph, components, is_k_connected
from .rigidity import is_globally_rigid2

__all__ = [
    "PRIME",
    "numeric_rank",
    "subsets_by_cost",
    "brute_min_gra",
    "brute_biconnect_augment",
    "brute_problem_b",
    "brute_problem_c",
    "brute_path_cover",
    "brute_connectivity_augment",
    "cut_vertices",
    "on_cycle",
]

PRIME = 2**31 - 1


def _rank_mod_p(rows, p=PRIME):
    rows = [r[:] for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] % p), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        prow = [(x * inv) % p for x in rows[rank]]
        rows[rank] = prow
        for i in range(len(rows)):
            if i != rank and rows[i][col] % p:
                f = rows[i][col]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], prow)]
        rank += 1
    return rank


def numeric_rank(g, d=2, seed=0):
    """Rank of the rigidity matrix of ``g`` in ``R^d`` at random points mod ``PRIME``.

    Each edge ``uv`` gives a row with ``p(u) - p(v)`` in the columns of ``u``
    and ``p(v) - p(u)`` in those of ``v``.  Coordinates are uniform in the
    field, drawn from ``random.Random(seed)``; the result equals the generic
    rank with high probability, so callers take the maximum over a few seeds.
    """
    rng = random.Random(seed)
    pts = [[rng.randrange(PRIME) for _ in range(d)] for _ in range(g.n)]
    rows = []
    for u, v in g.edges:
        row = [0] * (d * g.n)
        for k in range(d):
            diff = (pts[u][k] - pts[v][k]) % PRIME
            row[d * u + k] = diff
            row[d * v + k] = (-diff) % PRIME
        rows.append(row)
    return _rank_mod_p(rows)


def subsets_by_cost(costs):
    """Yield ``(total, indices)`` over all subsets in nondecreasing total cost.

    ``costs`` must be finite and non-negative.  Subsets are generated from a
    heap: the successors of ``(..., i)`` are ``(..., i, i+1)`` and
    ``(..., i+1)``, which visits every subset exactly once in cost order
    when ``costs`` is sorted.
    """
    order = sorted(range(len(costs)), key=lambda i: (costs[i], i))
    cs = [costs[i] for i in order]
    yield 0, ()
    if not cs:
        return
    heap = [(cs[0], (0,))]
    while heap:
        total, idx = heapq.heappop(heap)
        yield total, tuple(sorted(order[i] for i in idx))
        last = idx[-1]
        if last + 1 < len(cs):
            heapq.heappush(heap, (total + cs[last + 1], idx + (last + 1,)))
            heapq.heappush(heap, (total - cs[last] + cs[last + 1], idx[:-1] + (last + 1,)))


def _search(pairs, c, accept, feasible_hint=None):
    cand = [p for p in pairs if c(*p) != INF]
    costs = [c(*p) for p in cand]
    if not accept(cand):
        return INF, None
    for total, idx in subsets_by_cost(costs):
        chosen = [cand[i] for i in idx]
        if feasible_hint is not None and not feasible_hint(chosen):
            continue
        if accept(chosen):
            return total, sorted(chosen)
    return INF, None  # unreachable: the full set was accepted


def brute_min_gra(g, c, bound=7):
    """Cheapest set of new edges making ``g`` globally rigid in the plane.

    Returns
    -------
    (cost, list or None)
        ``(INF, None)`` if no finite-cost augmentation exists.

    Raises
    ------
    TooLarge
        If ``g.n > bound``.
    """
    if g.n > bound:
        raise TooLarge(f"n={g.n} exceeds bound {bound}")
    n = g.n
    deg = [g.degree(v) for v in range(n)]

    def hint(chosen):
        if n >= 4:
            if g.m + len(chosen) < 2 * n - 2:
                return False
            d = deg[:]
            for u, v in chosen:
                d[u] += 1
                d[v] += 1
            if min(d) < 3:
                return False
        return True

    return _search(g.non_edges(), c, lambda f: is_globally_rigid2(g.add_edges(f)), hint)


def brute_connectivity_augment(g, k, c, bound=8):
    """Cheapest set of new edges making ``g`` ``k``-connected."""
    if g.n > bound:
        raise TooLarge(f"n={g.n} exceeds bound {bound}")
    return _search(g.non_edges(), c, lambda f: is_k_connected(g.add_edges(f), k))


def brute_biconnect_augment(h, c, bound=8):
    """Cheapest set of new edges leaving ``h`` connected without cut vertices.

    On three or more vertices this is 2-connectivity; ``K_2`` needs nothing.
    """
    if h.n > bound:
        raise TooLarge(f"n={h.n} exceeds bound {bound}")

    def ok(f):
        edges = list(h.edges) + f
        return len(components(Graph(h.n, edges))) == 1 and not cut_vertices(h.n, edges)

    return _search(h.non_edges(), c, ok)


def cut_vertices(n, edges):
    """Cut vertices of the multigraph on ``0..n-1`` (loops and repeats allowed)."""
    simple = Graph(n, [(u, v) for u, v in edges if u != v])
    base = len(components(simple))
    out = []
    for x in range(n):
        rest = [(u, v) for u, v in simple.edges if x not in (u, v)]
        sub = Graph(n, rest)
        # x itself becomes an isolated component
        if len(components(sub)) - 1 > base:
            out.append(x)
    return out


def on_cycle(n, edges):
    """Vertices lying on a cycle of the multigraph (a loop counts for its vertex)."""
    edges = list(edges)
    out = set()
    for i, (u, v) in enumerate(edges):
        if u == v:
            out.add(u)
            continue
        adj = [[] for _ in range(n)]
        for j, (a, b) in enumerate(edges):
            if j != i and a != b:
                adj[a].append(b)
                adj[b].append(a)
        seen = {u}
        queue = deque([u])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        if v in seen:
            out.update((u, v))
    return sorted(out)


def brute_problem_b(t, U, c, bound=8):
    """Cheapest ``F`` such that no vertex of ``U`` is a cut vertex of ``t + F``."""
    if t.n > bound:
        raise TooLarge(f"n={t.n} exceeds bound {bound}")
    U = set(U)
    return _search(
        t.non_edges(), c,
        lambda f: not U.intersection(cut_vertices(t.n, list(t.edges) + f)))


def brute_problem_c(t, U, c, bound=8):
    """Cheapest ``F`` (pairs and loops) putting every vertex of ``U`` on a cycle of ``t + F``."""
    if t.n > bound:
        raise TooLarge(f"n={t.n} exceeds bound {bound}")
    U = set(U)
    pairs = [(x, x) for x in range(t.n)] + t.non_edges()
    return _search(pairs, c, lambda f: U <= set(on_cycle(t.n, list(t.edges) + f)))


def brute_path_cover(U, paths):
    """Cheapest subfamily of ``paths`` whose vertex sets cover ``U``.

    Parameters
    ----------
    U : iterable of vertices
    paths : list of (vertex sequence, cost)

    Returns
    -------
    (cost, list of int)
        Indices of the chosen paths; ``(INF, None)`` if ``U`` cannot be covered.
    """
    U = sorted(set(U))
    pos = {u: i for i, u in enumerate(U)}
    full = (1 << len(U)) - 1
    masks = []
    for verts, cost in paths:
        m = 0
        for x in verts:
            if x in pos:
                m |= 1 << pos[x]
        masks.append((m, cost))
    best = [INF] * (full + 1)
    choice = [None] * (full + 1)
    best[0] = 0
    for s in range(full + 1):
        if best[s] == INF:
            continue
        for i, (m, cost) in enumerate(masks):
            t = s | m
            if t != s and best[s] + cost < best[t]:
                best[t] = best[s] + cost
                choice[t] = (s, i)
    if best[full] == INF:
        return INF, None
    chosen, s = [], full
    while s:
        s, i = choice[s]
        chosen.append(i)
    return best[full], sorted(chosen)
