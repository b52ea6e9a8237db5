"""The 2-dimensional rigidity matroid.

Independence is decided by the (2,3)-pebble game, with edges offered in
sorted order so that the resulting base (and everything derived from it)
is deterministic.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import AlreadyEdge, InvalidPair, NotDependent
from .graph import is_k_connected
from .kernels import PebbleGame

__all__ = [
    "MatroidPartition",
    "pebble_base",
    "r2_rank",
    "is_rigid2",
    "r2_bridges",
    "fundamental_circuit",
    "r2_components",
    "is_linked2",
    "is_redundantly_rigid2",
    "is_globally_rigid2",
    "global_rigidity_failure",
]


def pebble_base(g):
    """Run the pebble game over ``g.edges`` in order.

    Returns
    -------
    (PebbleGame, list, list)
        Final game state, accepted edges (a base), rejected edges.
    """
    game = PebbleGame(g.n)
    base, rejected = [], []
    for u, v in g.edges:
        (base if game.add_edge(u, v) else rejected).append((u, v))
    return game, base, rejected


def r2_rank(g):
    """Rank of the edge set of ``g`` in the 2-dimensional rigidity matroid.

    Examples
    --------
    >>> from rigaug.fixtures import K4, C4
    >>> r2_rank(K4), r2_rank(C4)
    (5, 4)
    """
    return pebble_base(g)[0].accepted


def is_rigid2(g):
    """Rigidity in the plane.

    For ``n >= 3`` this is ``r2_rank(g) == 2n - 3``.  For ``n <= 2`` the graph
    is rigid iff it is complete, except that the empty graph is not rigid.
    """
    if g.n <= 2:
        return g.n >= 1 and g.is_complete()
    return r2_rank(g) == 2 * g.n - 3


def _circuit_from_state(game, base, e, skip=None):
    """Fundamental circuit of ``e`` with respect to ``base``.

    ``game`` must hold exactly ``base`` as its accepted set and ``e`` must be
    dependent on it.  Only base edges inside the rigid block reached from
    ``e`` can lie on the circuit; each is tested by deleting it.  Edges for
    which ``skip(f)`` is true are not tested and not reported.
    """
    u, v = e
    inside = set(game.reach(u, v))
    cand = [f for f in base if f[0] in inside and f[1] in inside]
    labels = sorted(inside)
    index = {x: i for i, x in enumerate(labels)}
    local = [(index[a], index[b]) for a, b in cand]
    eu, ev = index[u], index[v]
    found = [e]
    for i, f in enumerate(cand):
        if skip is not None and skip(f):
            continue
        probe = PebbleGame(len(labels))
        for j, (a, b) in enumerate(local):
            if j != i:
                probe.add_edge(a, b)
        if probe.is_independent(eu, ev):
            found.append(f)
    return found


def fundamental_circuit(g, base, e):
    """The unique circuit of the rigidity matroid inside ``base + e``.

    Parameters
    ----------
    g : Graph
        Supplies the vertex count.
    base : iterable of edges
        An independent edge set.
    e : edge
        A pair not in ``base`` that depends on it.

    Returns
    -------
    list of edges
        The circuit, sorted, including ``e``.

    Raises
    ------
    NotDependent
        If ``e`` belongs to ``base`` or is independent of it.
    """
    base = sorted({(min(a, b), max(a, b)) for a, b in base})
    e = (min(e), max(e))
    if e in base:
        raise NotDependent(f"{e} is a base element")
    game = PebbleGame(g.n)
    for a, b in base:
        if not game.add_edge(a, b):
            raise ValueError("base is not independent")
    if game.is_independent(*e):
        raise NotDependent(f"{e} is independent of the base")
    return sorted(_circuit_from_state(game, base, e))


@dataclass(frozen=True)
class MatroidPartition:
    """Connected components of the rigidity matroid restricted to ``E``.

    ``parts`` lists every component (bridges appear as singleton parts),
    sorted by smallest edge; ``bridges`` lists the coloops.
    """

    parts: tuple
    bridges: tuple

    def is_connected(self):
        return len(self.parts) == 1


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


def r2_components(g):
    """Partition ``E`` into the connected components of the rigidity matroid.

    Components are the connected components of the hypergraph formed by the
    fundamental circuits of all non-base edges with respect to one pebble
    base; base edges on no circuit are bridges.
    """
    game, base, rejected = pebble_base(g)
    uf = _UnionFind(g.edges)
    for e in rejected:
        root = uf.find(e)
        for f in _circuit_from_state(game, base, e, skip=lambda f: uf.find(f) == uf.find(e)):
            uf.union(root, f)
            root = uf.find(e)
    groups = {}
    for e in g.edges:
        groups.setdefault(uf.find(e), []).append(e)
    parts = tuple(sorted(tuple(p) for p in groups.values()))
    bridges = tuple(p[0] for p in parts if len(p) == 1 and p[0] in set(base))
    return MatroidPartition(parts, bridges)


def r2_bridges(g):
    """Edges whose deletion lowers the rank (coloops of the rigidity matroid)."""
    return list(r2_components(g).bridges)


def is_linked2(g, u, v):
    """Whether adding the non-edge ``uv`` leaves the rank unchanged.

    Raises
    ------
    AlreadyEdge
        If ``uv`` is an edge.
    """
    if u == v:
        raise InvalidPair("linkedness needs two distinct vertices")
    if g.has_edge(u, v):
        raise AlreadyEdge(f"({u}, {v}) is an edge")
    game = pebble_base(g)[0]
    return not game.is_independent(u, v)


def is_redundantly_rigid2(g):
    """Rigid, and still rigid after deleting any single edge."""
    return is_rigid2(g) and not r2_bridges(g)


def global_rigidity_failure(g):
    """``None`` if ``g`` is globally rigid in the plane, else the failed condition.

    The condition is one of ``"not-complete"`` (only for ``n <= 3``),
    ``"not-3-connected"`` and ``"not-R2-connected"``.
    """
    n = g.n
    if n <= 3:
        return None if n >= 1 and g.is_complete() else "not-complete"
    if any(g.degree(v) < 3 for v in range(n)) or not is_k_connected(g, 3):
        return "not-3-connected"
    if g.m < 2 * n - 2 or not r2_components(g).is_connected():
        return "not-R2-connected"
    return None


def is_globally_rigid2(g):
    """Global rigidity in the plane.

    For ``n >= 4``: 3-connected and the rigidity matroid of ``g`` is
    connected.  For ``n <= 3``: complete (the empty graph is excluded).

    Examples
    --------
    >>> from rigaug.fixtures import K4E, K5E
    >>> is_globally_rigid2(K4E), is_globally_rigid2(K5E)
    (False, True)
    """
    return global_rigidity_failure(g) is None

