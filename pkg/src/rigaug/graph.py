"""Simple undirected graphs on ``0..n-1`` and connectivity primitives.

Graphs are immutable.  Adjacency is kept twice: as the sorted edge tuple
and as one integer bitmask per vertex, which makes neighbourhood
intersections and "G minus a vertex set" searches cheap.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import networkx as nx

from .errors import (
    CleavingPrecondition,
    EmptySet,
    InvalidPair,
    NotBiconnected,
    NotConnected,
)
from .kernels import disjoint_paths

__all__ = [
    "Graph",
    "Separator2",
    "BlockCutTree",
    "bits",
    "components",
    "kappa",
    "is_k_connected",
    "two_separators",
    "find_two_separator",
    "block_cut_tree",
    "three_block",
    "clique_hull",
    "maximal_clique_of_edge",
]


def bits(mask):
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _pair(u, v):
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    Parameters
    ----------
    n : int
        Number of vertices.
    edges : iterable of pairs
        Unordered pairs; duplicates are merged, orientation is ignored.

    Raises
    ------
    InvalidPair
        On a self-loop or an endpoint outside ``0..n-1``.
    """

    __slots__ = ("n", "edges", "adj", "_eset")

    def __init__(self, n, edges=()):
        if n < 0:
            raise ValueError("negative vertex count")
        eset = set()
        for u, v in edges:
            if u == v:
                raise InvalidPair(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidPair(f"pair ({u}, {v}) out of range for n={n}")
            eset.add(_pair(u, v))
        adj = [0] * n
        for u, v in eset:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.edges = tuple(sorted(eset))
        self.adj = tuple(adj)
        self._eset = frozenset(eset)

    @classmethod
    def complete(cls, n):
        return cls(n, combinations(range(n), 2))

    @property
    def m(self):
        return len(self.edges)

    @property
    def full_mask(self):
        return (1 << self.n) - 1

    def has_edge(self, u, v):
        return (self.adj[u] >> v) & 1 == 1

    def neighbors(self, v):
        return list(bits(self.adj[v]))

    def degree(self, v):
        return self.adj[v].bit_count()

    def is_complete(self):
        return self.m == self.n * (self.n - 1) // 2

    def non_edges(self):
        """All non-adjacent pairs ``(u, v)``, ``u < v``, in lexicographic order."""
        out = []
        for u in range(self.n):
            missing = ~self.adj[u] & self.full_mask & ~((1 << (u + 1)) - 1)
            out.extend((u, v) for v in bits(missing))
        return out

    def add_edges(self, pairs):
        pairs = list(pairs)
        if not pairs:
            return self
        return Graph(self.n, list(self.edges) + pairs)

    def remove_edges(self, pairs):
        drop = {_pair(u, v) for u, v in pairs}
        return Graph(self.n, [e for e in self.edges if e not in drop])

    def induced(self, vertices):
        """Induced subgraph, relabelled ``0..k-1``.

        Returns
        -------
        (Graph, list)
            The subgraph and ``labels`` with ``labels[i]`` the original
            name of new vertex ``i`` (labels are sorted).
        """
        labels = sorted(set(vertices))
        index = {v: i for i, v in enumerate(labels)}
        sub = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return Graph(len(labels), sub), labels

    def vertex_mask(self, vertices):
        mask = 0
        for v in vertices:
            mask |= 1 << v
        return mask

    def to_networkx(self):
        h = nx.Graph()
        h.add_nodes_from(range(self.n))
        h.add_edges_from(self.edges)
        return h

    def __contains__(self, pair):
        u, v = pair
        return _pair(u, v) in self._eset

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def _component_masks(adj, alive):
    comps = []
    rest = alive
    while rest:
        comp = rest & -rest
        frontier = comp
        while frontier:
            grown = 0
            for x in bits(frontier):
                grown |= adj[x]
            frontier = grown & alive & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def components(g):
    """Connected components as sorted vertex lists, ordered by minimum element."""
    return [list(bits(c)) for c in _component_masks(g.adj, g.full_mask)]


def _components_without(g, removed):
    alive = g.full_mask & ~g.vertex_mask(removed)
    return [list(bits(c)) for c in _component_masks(g.adj, alive)]


def _neighbour_lists(g):
    return [list(bits(a)) for a in g.adj]


def kappa(g, u, v):
    """Local vertex connectivity of ``u`` and ``v``.

    For non-adjacent ``u, v`` this is the size of a minimum vertex cut
    separating them (Menger).  For adjacent pairs the convention is
    ``1 + kappa(g - uv, u, v)``, so ``K_n`` gives ``n - 1``.

    Raises
    ------
    InvalidPair
        If ``u == v``.
    """
    if u == v:
        raise InvalidPair("kappa needs two distinct vertices")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise InvalidPair(f"vertex out of range for n={g.n}")
    if g.has_edge(u, v):
        return 1 + kappa(g.remove_edges([(u, v)]), u, v)
    return disjoint_paths(g.n, _neighbour_lists(g), u, v, g.n)


def is_k_connected(g, k):
    """True iff ``n >= k + 1`` and every pair has local connectivity at least ``k``.

    ``K_{k+1}`` counts as k-connected; ``K_2`` is 1-connected but not 2-connected.
    """
    if k <= 0:
        return g.n >= 1
    if g.n < k + 1:
        return False
    if k <= 3:
        full = g.full_mask
        for cut in combinations(range(g.n), k - 1):
            alive = full & ~g.vertex_mask(cut)
            if len(_component_masks(g.adj, alive)) > 1:
                return False
        return True
    nbrs = _neighbour_lists(g)
    for a, b in g.non_edges():
        if disjoint_paths(g.n, nbrs, a, b, k) < k:
            return False
    return True


@dataclass(frozen=True)
class Separator2:
    """A 2-separator ``(a, b)`` with the components of ``G - {a, b}``."""

    a: int
    b: int
    components: tuple


def _require_biconnected(g):
    if g.n == 2 and g.m == 1:
        return
    if not is_k_connected(g, 2):
        raise NotBiconnected("graph is not 2-connected")


def two_separators(g):
    """All 2-separators of a 2-connected graph, in lexicographic order.

    Raises
    ------
    NotBiconnected
        If ``g`` is not 2-connected.
    """
    _require_biconnected(g)
    out = []
    for a, b in combinations(range(g.n), 2):
        comps = _components_without(g, (a, b))
        if len(comps) >= 2:
            out.append(Separator2(a, b, tuple(tuple(c) for c in comps)))
    return out


def find_two_separator(g, skip=()):
    """First 2-separator of ``g`` not listed in ``skip`` (no 2-connectivity check)."""
    skip = {_pair(a, b) for a, b in skip}
    for a, b in combinations(range(g.n), 2):
        if (a, b) in skip:
            continue
        comps = _components_without(g, (a, b))
        if len(comps) >= 2:
            return Separator2(a, b, tuple(tuple(c) for c in comps))
    return None


@dataclass(frozen=True)
class BlockCutTree:
    """Block-cut vertex tree of a connected graph.

    Attributes
    ----------
    blocks : tuple of tuple
        Vertex sets of the blocks (maximal 2-connected subgraphs, bridges
        included), sorted.
    cut_vertices : tuple
        Sorted cut vertices.
    nodes : tuple
        Tree nodes: ``("B", i)`` for block ``i`` and ``("C", v)`` for cut vertex ``v``.
    tree_edges : tuple
        Pairs of node indices.
    """

    n: int
    blocks: tuple
    cut_vertices: tuple
    nodes: tuple
    tree_edges: tuple

    @property
    def t(self):
        """Number of end-blocks (blocks with at most one cut vertex)."""
        cuts = set(self.cut_vertices)
        return sum(1 for blk in self.blocks if len(cuts.intersection(blk)) <= 1)

    def b(self, v):
        """Number of components of ``G - v``."""
        if self.n == 1:
            return 0
        return sum(1 for blk in self.blocks if v in blk)

    @property
    def b_max(self):
        return max((self.b(v) for v in range(self.n)), default=0)

    def node_of(self, v):
        """Index of the tree node carrying ``v`` (its cut node, else its block)."""
        key = ("C", v) if v in self.cut_vertices else ("B", next(i for i, blk in enumerate(self.blocks) if v in blk))
        return self.nodes.index(key)


def block_cut_tree(g):
    """Block-cut tree of a connected graph.

    Raises
    ------
    NotConnected
        If ``g`` is empty or disconnected.
    """
    if g.n == 0 or len(components(g)) != 1:
        raise NotConnected("block-cut tree needs a connected graph")
    if g.n == 1:
        blocks = ((0,),)
    else:
        blocks = tuple(sorted(tuple(sorted(b)) for b in nx.biconnected_components(g.to_networkx())))
    count = {}
    for blk in blocks:
        for v in blk:
            count[v] = count.get(v, 0) + 1
    cuts = tuple(sorted(v for v, c in count.items() if c > 1))
    nodes = tuple([("B", i) for i in range(len(blocks))] + [("C", v) for v in cuts])
    pos = {node: i for i, node in enumerate(nodes)}
    edges = []
    for i, blk in enumerate(blocks):
        for v in blk:
            if ("C", v) in pos:
                edges.append((pos[("B", i)], pos[("C", v)]))
    return BlockCutTree(g.n, blocks, cuts, nodes, tuple(sorted(edges)))


def three_block(g, u, v):
    """The 3-block of a non-adjacent pair, obtained by cleaving.

    Repeatedly takes a 2-separator ``(a, b)`` of the current graph, keeps
    the side ``V(C) + {a, b}`` that contains ``u`` and ``v`` and adds ``ab``.

    Returns
    -------
    (Graph, list)
        The 3-block (relabelled) and the original labels of its vertices.

    Raises
    ------
    CleavingPrecondition
        If ``uv`` is an edge, ``g`` is not 2-connected, ``kappa(u, v) < 3``,
        or ``(u, v)`` is itself a 2-separator.
    """
    if u == v or g.has_edge(u, v):
        raise CleavingPrecondition("pair must be distinct and non-adjacent")
    if not is_k_connected(g, 2):
        raise CleavingPrecondition("graph must be 2-connected")
    if kappa(g, u, v) < 3:
        raise CleavingPrecondition("kappa(u, v) < 3")
    h, labels = g, list(range(g.n))
    while True:
        lu, lv = labels.index(u), labels.index(v)
        sep = find_two_separator(h)
        if sep is None:
            return h, labels
        if {sep.a, sep.b} == {lu, lv}:
            raise CleavingPrecondition("(u, v) is a 2-separator")
        keep = None
        for comp in sep.components:
            side = set(comp) | {sep.a, sep.b}
            if lu in side and lv in side:
                keep = side
                break
        if keep is None:
            raise CleavingPrecondition("a 2-separator splits u from v")
        piece, sub_labels = h.induced(keep)
        ia, ib = sub_labels.index(sep.a), sub_labels.index(sep.b)
        h = piece.add_edges([(ia, ib)])
        labels = [labels[x] for x in sub_labels]


def clique_hull(g, x):
    """Clique(G, X): drop each component of ``G - X`` and make its neighbourhood a clique.

    Returns
    -------
    (Graph, list)
        The graph on ``X`` (relabelled) and the sorted labels of ``X``.

    Raises
    ------
    EmptySet
        If ``x`` is empty.
    """
    xs = sorted(set(x))
    if not xs:
        raise EmptySet("clique_hull needs a nonempty vertex set")
    xmask = g.vertex_mask(xs)
    extra = []
    for comp in _component_masks(g.adj, g.full_mask & ~xmask):
        nb = 0
        for w in bits(comp):
            nb |= g.adj[w]
        extra.extend(combinations(list(bits(nb & xmask)), 2))
    h = g.add_edges(extra)
    return h.induced(xs)


def maximal_clique_of_edge(g, e):
    """Grow the clique ``{u, v}`` greedily (lowest index first) until maximal.

    In a 3-connected totally loose graph the result is the unique maximal
    clique through ``e``; elsewhere it is one maximal clique through ``e``.
    """
    u, v = e
    members = (1 << u) | (1 << v)
    common = g.adj[u] & g.adj[v]
    while common:
        w = (common & -common).bit_length() - 1
        members |= 1 << w
        common &= g.adj[w]
    return list(bits(members))
