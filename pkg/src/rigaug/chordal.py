"""d-connected chordal graphs: closure, tree representation and (d+1)-connectivity augmentation.

For these graphs global rigidity in ``R^d`` coincides with
(d+1)-connectivity, so the augmentation below is also a globally rigid
augmentation in ``R^d``.
"""
from __future__ import annotations

from itertools import combinations

import networkx as nx

from .augment import AugResult, problem_b_2approx
from .costs import INF, total_cost
from .errors import Precondition
from .graph import Graph, _components_without, is_k_connected
from .treerep import NodeKind, RepNode, project_costs, tree_from_nodes

__all__ = [
    "chordal_peo",
    "tlc_d_chordal",
    "chordal_tree_rep",
    "chordal_augment_2approx",
]


def chordal_peo(g):
    """Maximum cardinality search order in which earlier neighbours form cliques.

    Reversing the returned order gives a perfect elimination ordering.  Ties
    go to the lowest index.

    Returns
    -------
    list or None
        ``None`` if ``g`` is not chordal.

    Examples
    --------
    >>> from rigaug.fixtures import C4, K5E
    >>> chordal_peo(C4) is None, chordal_peo(K5E)
    (True, [0, 1, 2, 3, 4])
    """
    n = g.n
    weight = [0] * n
    done = 0
    order = []
    for _ in range(n):
        v = max((x for x in range(n) if not (done >> x) & 1), key=lambda x: (weight[x], -x))
        earlier = g.adj[v] & done
        for x in (x for x in range(n) if (earlier >> x) & 1):
            if (earlier & ~(1 << x)) & ~g.adj[x]:
                return None
        order.append(v)
        done |= 1 << v
        for x in g.neighbors(v):
            weight[x] += 1
    return order


def _check(g, d):
    if d < 1:
        raise Precondition("d must be positive")
    order = chordal_peo(g)
    if order is None:
        raise Precondition("graph is not chordal")
    if not is_k_connected(g, d):
        raise Precondition(f"graph is not {d}-connected")
    return order


def _pieces(g, d, order):
    pieces = [set(order[: d + 1])]
    placed = set(order[: d + 1])
    for v in order[d + 1:]:
        nb = {x for x in g.neighbors(v) if x in placed}
        if len(nb) < d:
            raise Precondition(f"vertex {v} has fewer than {d} earlier neighbours")
        if len(nb) == d:
            pieces.append(nb | {v})
        else:
            host = next((p for p in pieces if nb <= p), None)
            if host is None:
                raise Precondition(f"earlier neighbours of {v} lie in no piece")
            host.add(v)
        placed.add(v)
    return pieces


def tlc_d_chordal(g, d):
    """Totally loose closure in ``R^d`` of a d-connected chordal graph.

    Vertices are taken in search order; a vertex with exactly ``d`` earlier
    neighbours opens a new piece on them, otherwise it joins the piece
    holding its earlier neighbours.  The closure makes every piece a clique,
    so it is a clique sum of complete graphs along size-``d`` cliques.

    Raises
    ------
    Precondition
        If ``g`` is not chordal or not d-connected.

    Examples
    --------
    >>> from rigaug.fixtures import K5E, K5
    >>> tlc_d_chordal(K5E, 2) == K5
    True
    """
    order = _check(g, d)
    extra = [p for piece in _pieces(g, d, order) for p in combinations(sorted(piece), 2)]
    return g.add_edges(extra)


def chordal_tree_rep(g, d):
    """Tree on maximal cliques (S) and separating size-``d`` clique intersections (Q).

    ``Q`` is joined to every maximal clique containing it.

    Raises
    ------
    Precondition
        If ``g`` is not chordal or the node graph is not a tree.
    """
    if chordal_peo(g) is None:
        raise Precondition("graph is not chordal")
    cliques = sorted(tuple(sorted(c)) for c in nx.find_cliques(g.to_networkx()))
    seps = set()
    for a, b in combinations(cliques, 2):
        common = tuple(sorted(set(a) & set(b)))
        if len(common) == d and len(_components_without(g, common)) >= 2:
            seps.add(common)
    nodes = [RepNode(NodeKind.S, c) for c in cliques] + [RepNode(NodeKind.Q, q) for q in sorted(seps)]
    edges = [(RepNode(NodeKind.Q, q), RepNode(NodeKind.S, c)) for q in seps for c in cliques if set(q) <= set(c)]
    t = tree_from_nodes(nodes, edges, g)
    if not nx.is_tree(t.to_networkx()):
        raise Precondition("clique structure is not a tree")
    return t


def chordal_augment_2approx(g, d, c):
    """New edges making a d-connected chordal graph (d+1)-connected, within twice the optimum.

    The closure's tree is built, costs are projected onto node pairs and
    every Q node is made a non-cut vertex; chosen node pairs are lifted to
    their cheapest original pairs.

    Raises
    ------
    Precondition
        If ``g`` is not chordal, not d-connected, or has fewer than ``d + 2`` vertices.
    """
    _check(g, d)
    if g.n < d + 2:
        raise Precondition(f"needs at least {d + 2} vertices")
    if is_k_connected(g, d + 1):
        return AugResult([], 0, {"B": []}, True, True)
    h = tlc_d_chordal(g, d)
    t = chordal_tree_rep(h, d)
    ct, witness = project_costs(t, c)
    tree = Graph(len(t.nodes), t.tree_edges)
    cost, fb = problem_b_2approx(tree, t.indices(NodeKind.Q), ct)
    if cost == INF:
        added = g.non_edges()
        return AugResult(added, INF, {"B": []}, is_k_connected(g.add_edges(added), d + 1), False)
    added = sorted({witness[(min(x, y), max(x, y))] for x, y in fb})
    return AugResult(added, total_cost(c, added), {"B": added},
                     is_k_connected(g.add_edges(added), d + 1), True)
