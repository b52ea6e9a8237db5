"""Minimum number of new edges making a rigid graph globally rigid in the plane.

The optimum equals ``max(ceil(l/2), c(G) - 1)`` where ``l`` counts pairwise
disjoint untied sets and ``c(G)`` is the largest number of components left
by deleting two vertices.  An optimal set is built on the reduced tree
representation of the totally loose closure.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import networkx as nx

from .errors import NotRigid, SpecialCase
from .graph import Graph, _components_without, block_cut_tree, is_k_connected
from .linkedness import is_sngr2, tlc2
from .rigidity import is_globally_rigid2, is_rigid2
from .treerep import NodeKind, build_tree_rep, private_vertices, reduce_tree_rep

__all__ = [
    "MinMaxReport",
    "c_of_g",
    "untied_ends",
    "biconnect_lower_bound",
    "biconnect_augment_exact",
    "tree_2ec_noncut",
    "min_size_augment",
]


def c_of_g(g):
    """Largest number of components of ``g - {a, b}`` over all pairs (1 if none splits)."""
    best = 1
    for a, b in combinations(range(g.n), 2):
        best = max(best, len(_components_without(g, (a, b))))
    return best


def _special(h):
    if h.is_complete():
        return "Complete"
    if is_k_connected(h, 3) and is_sngr2(h):
        return "SNGR"
    return None


def _reduced_tree(h):
    return reduce_tree_rep(build_tree_rep(h, check=False))


def untied_ends(g):
    """Private vertex sets of the leaves of the reduced tree of ``tlc2(g)``.

    Raises
    ------
    NotRigid
        If ``g`` is not rigid.
    SpecialCase
        If the closure is complete or a 3-connected SNGR graph.
    """
    if not is_rigid2(g):
        raise NotRigid("graph is not rigid")
    h = tlc2(g)
    kind = _special(h)
    if kind:
        raise SpecialCase(kind)
    tr = _reduced_tree(h)
    return sorted(private_vertices(tr, i) for i in tr.leaves())


def biconnect_lower_bound(h):
    """``max(ceil(t/2), b - 1)`` for a connected graph, 0 if it has no cut vertex."""
    if h.n <= 2 or not block_cut_tree(h).cut_vertices:
        return 0
    bct = block_cut_tree(h)
    return max((bct.t + 1) // 2, bct.b_max - 1)


def _end_vertices(h):
    # one representative (non-cut vertex) per leaf block
    bct = block_cut_tree(h)
    cuts = set(bct.cut_vertices)
    out = []
    for blk in bct.blocks:
        if len(cuts.intersection(blk)) <= 1:
            out.extend(v for v in blk if v not in cuts)
    return out


def biconnect_augment_exact(h, allowed=None, preferred=None):
    """Minimum number of new edges making a connected graph free of cut vertices.

    Each step adds a pair that lowers ``max(ceil(t/2), b - 1)`` by one; such
    a pair always exists because that bound is the optimum.  Pairs between
    non-cut vertices of leaf blocks are tried first.

    Parameters
    ----------
    allowed : callable, optional
        ``allowed(u, v)`` filters candidate pairs.
    preferred : collection, optional
        Vertices whose pairs are tried before any other pair of leaf-block vertices.
    """
    cur = h
    added = []
    lb = biconnect_lower_bound(cur)
    while lb > 0:
        ends = _end_vertices(cur)
        tiers = [list(combinations(sorted(ends), 2)), cur.non_edges()]
        if preferred is not None:
            tiers.insert(0, list(combinations(sorted(set(ends) & set(preferred)), 2)))
        step = None
        for tier in tiers:
            for u, v in tier:
                if cur.has_edge(u, v) or (allowed is not None and not allowed(u, v)):
                    continue
                if biconnect_lower_bound(cur.add_edges([(u, v)])) == lb - 1:
                    step = (u, v)
                    break
            if step:
                break
        if step is None:
            raise RuntimeError("no pair lowers the bound")
        added.append(step)
        cur = cur.add_edges([step])
        lb -= 1
    return added


def tree_2ec_noncut(t, Q):
    """Fewest new pairs making the tree ``t`` 2-edge-connected with no vertex of ``Q`` a cut vertex.

    Every vertex outside ``Q`` with degree ``d >= 2`` is replaced by a
    triangle carrying its tree neighbours in turn; the result is made free
    of cut vertices exactly and the triangles are contracted back.  The
    size is ``max(ceil(leaves/2), max_{q in Q} deg(q) - 1)``.  A tree on two
    vertices gets one edge parallel to its tree edge.

    Examples
    --------
    >>> from rigaug.graph import Graph
    >>> tree_2ec_noncut(Graph(3, [(0, 1), (1, 2)]), [1])
    [(0, 2)]
    """
    Q = set(Q)
    if t.n <= 1:
        return []
    if t.n == 2:
        return [(0, 1)]
    rep_of = {}  # (tree vertex, neighbour) -> expanded vertex
    owner = []
    edges = []
    for v in range(t.n):
        nb = t.neighbors(v)
        if v in Q or len(nb) <= 1:
            x = len(owner)
            owner.append(v)
            for w in nb:
                rep_of[(v, w)] = x
        else:
            tri = [len(owner) + i for i in range(3)]
            owner.extend([v] * 3)
            edges.extend(combinations(tri, 2))
            for i, w in enumerate(nb):
                rep_of[(v, w)] = tri[i % 3]
    for a, b in t.edges:
        edges.append((rep_of[(a, b)], rep_of[(b, a)]))
    expanded = Graph(len(owner), edges)
    leaves = [x for x in range(len(owner)) if t.degree(owner[x]) == 1]
    added = biconnect_augment_exact(expanded, allowed=lambda x, y: owner[x] != owner[y], preferred=leaves)
    return sorted({(min(owner[x], owner[y]), max(owner[x], owner[y])) for x, y in added})


@dataclass
class MinMaxReport:
    """Both sides of the min-max formula and an optimal solution.

    ``special`` is ``"Complete"`` or ``"SNGR"`` when the closure falls in
    one of the cases without a tree argument, else ``None``.
    """

    opt: int
    l: int
    cG: int
    t_reduced: int
    bQ_reduced: int
    solution: list = field(default_factory=list)
    certified: bool = False
    special: object = None

    @property
    def formula(self):
        return max((self.l + 1) // 2, self.cG - 1)

    def to_dict(self):
        return {
            "opt": self.opt,
            "l": self.l,
            "cG": self.cG,
            "t_reduced": self.t_reduced,
            "bQ_reduced": self.bQ_reduced,
            "solution": [list(e) for e in self.solution],
            "certified": self.certified,
            "special": self.special,
        }


def _two_cliques_cover(h):
    cliques = [set(c) for c in nx.find_cliques(h.to_networkx())]
    full = set(range(h.n))
    return any(a | b == full for a, b in combinations(cliques, 2))


def min_size_augment(g):
    """Minimum-size globally rigid augmentation of a rigid graph.

    Raises
    ------
    NotRigid
        If ``g`` is not rigid.

    Examples
    --------
    >>> from rigaug.fixtures import TRIK4
    >>> r = min_size_augment(TRIK4)
    >>> r.opt, r.l, r.cG, r.certified
    (2, 3, 3, True)
    """
    if not is_rigid2(g):
        raise NotRigid("graph is not rigid")
    cg = c_of_g(g) if g.n >= 3 else 1
    h = tlc2(g)
    kind = _special(h)
    if kind == "Complete":
        return MinMaxReport(0, 0, cg, 0, 0, [], is_globally_rigid2(g), kind)
    if kind == "SNGR":
        # any missing pair of the closure works; it is also missing in g
        sol = [h.non_edges()[0]]
        l = 2 if _two_cliques_cover(h) else 1
        return MinMaxReport(1, l, cg, 0, 0, sol, is_globally_rigid2(g.add_edges(sol)), kind)
    tr = _reduced_tree(h)
    leaves = tr.leaves()
    tree = Graph(len(tr.nodes), tr.tree_edges)
    qs = tr.indices(NodeKind.Q)
    f = tree_2ec_noncut(tree, qs)
    sol = []
    for x, y in f:
        wx, wy = private_vertices(tr, x), private_vertices(tr, y)
        if not wx or not wy:
            raise RuntimeError("tree edge does not join two leaves")
        sol.append((min(wx[0], wy[0]), max(wx[0], wy[0])))
    sol = sorted(set(sol))
    bq = max((tr.degree(q) for q in qs), default=0)
    return MinMaxReport(len(sol), len(leaves), cg, len(leaves), bq, sol,
                        is_globally_rigid2(g.add_edges(sol)), None)

