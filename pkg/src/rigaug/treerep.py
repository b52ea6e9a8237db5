"""Tree representation of rigid totally loose graphs in the plane.

Nodes are 3-connected SNGR blocks (``H``), standard cliques (``S``) and
2-separators (``Q``).  The tree encodes every globally rigid augmentation:
mapping each new pair to a tree path, an augmentation works iff every ``H``
lies on a cycle and no ``Q`` is a cut vertex.
"""
from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass

import networkx as nx

from .costs import INF, CostFn
from .errors import AlreadyEdge, NotTreeRepresentable
from .graph import _components_without, find_two_separator, maximal_clique_of_edge

__all__ = [
    "NodeKind",
    "RepNode",
    "TreeRep",
    "TreeEdgeRef",
    "build_tree_rep",
    "tree_from_nodes",
    "reduce_tree_rep",
    "private_vertices",
    "map_edge",
    "project_costs",
    "tree_multigraph",
    "check_augmentation",
    "to_dot",
]


class NodeKind(enum.Enum):
    H = "H"
    S = "S"
    Q = "Q"


_ORDER = {NodeKind.H: 0, NodeKind.S: 1, NodeKind.Q: 2}


@dataclass(frozen=True)
class RepNode:
    kind: NodeKind
    vertices: tuple

    def sort_key(self):
        return (_ORDER[self.kind], self.vertices)

    def __str__(self):
        return f"{self.kind.value}{{{','.join(map(str, self.vertices))}}}"


@dataclass(frozen=True)
class TreeEdgeRef:
    """Endpoints of the tree path of a pair; ``x == y`` is a loop."""

    x: int
    y: int

    @property
    def is_loop(self):
        return self.x == self.y

    def key(self):
        return (min(self.x, self.y), max(self.x, self.y))


@dataclass(frozen=True)
class TreeRep:
    """Nodes sorted by (kind H<S<Q, vertices); ``tree_edges`` are sorted index pairs."""

    nodes: tuple
    tree_edges: tuple
    owner: object

    def __len__(self):
        return len(self.nodes)

    def neighbors(self, i):
        return sorted({b for a, b in self.tree_edges if a == i} | {a for a, b in self.tree_edges if b == i})

    def degree(self, i):
        return sum(1 for e in self.tree_edges if i in e)

    def indices(self, kind):
        return [i for i, x in enumerate(self.nodes) if x.kind is kind]

    def containing(self, v):
        return [i for i, x in enumerate(self.nodes) if v in x.vertices]

    def leaves(self):
        if len(self.nodes) == 1:
            return []
        return [i for i in range(len(self.nodes)) if self.degree(i) == 1]

    def to_networkx(self):
        t = nx.Graph()
        t.add_nodes_from(range(len(self.nodes)))
        t.add_edges_from(self.tree_edges)
        return t


def tree_from_nodes(nodes, edges, owner):
    """Canonical :class:`TreeRep` from a node collection and node-pair edges."""
    order = sorted(set(nodes), key=RepNode.sort_key)
    index = {x: i for i, x in enumerate(order)}
    tedges = sorted({tuple(sorted((index[a], index[b]))) for a, b in edges})
    return TreeRep(tuple(order), tuple(tedges), owner)


def _attach_point(nodes, a, b):
    # containment-minimal node with >= 3 vertices holding both a and b
    cand = [x for x in nodes if x.kind is not NodeKind.Q and a in x.vertices and b in x.vertices]
    if not cand:
        raise NotTreeRepresentable(f"no block contains separator ({a}, {b})")
    minimal = [x for x in cand if not any(y is not x and set(y.vertices) < set(x.vertices) for y in cand)]
    return min(minimal, key=lambda x: (len(x.vertices), x.sort_key()))


def _maximal_cliques(g):
    seen = set()
    for e in g.edges:
        seen.add(tuple(maximal_clique_of_edge(g, e)))
    return sorted(seen, key=lambda c: (-len(c), c))


def _build(g, labels):
    """Nodes and node-pair edges (original labels) of the representation of ``g``."""
    if g.is_complete():
        return {RepNode(NodeKind.S, tuple(labels))}, set()
    sep = find_two_separator(g)
    if sep is not None:
        a, b = sep.a, sep.b
        if not g.has_edge(a, b):
            raise NotTreeRepresentable(f"2-separator ({labels[a]}, {labels[b]}) is not an edge")
        q = RepNode(NodeKind.Q, (labels[a], labels[b]))
        nodes, edges = {q}, set()
        for comp in sep.components:
            piece, sub = g.induced(set(comp) | {a, b})
            pn, pe = _build(piece, [labels[x] for x in sub])
            nodes |= pn
            edges |= pe
            edges.add((q, _attach_point(pn, labels[a], labels[b])))
        return nodes, edges
    cliques = _maximal_cliques(g)
    for clique in cliques:
        if len(clique) < 3:
            continue
        comps = _components_without(g, clique)
        if len(comps) >= 2:
            nodes, edges = set(), set()
            for comp in comps:
                piece, sub = g.induced(set(comp) | set(clique))
                pn, pe = _build(piece, [labels[x] for x in sub])
                nodes |= pn
                edges |= pe
            return nodes, edges
    h = RepNode(NodeKind.H, tuple(labels))
    nodes, edges = {h}, set()
    for clique in cliques:
        if len(clique) >= 3:
            s = RepNode(NodeKind.S, tuple(labels[x] for x in clique))
            nodes.add(s)
            edges.add((s, h))
    return nodes, edges


def build_tree_rep(g, check=True):
    """Tree representation of a rigid totally loose graph.

    Parameters
    ----------
    g : Graph
        Rigid and totally loose in the plane, ``n >= 3``.
    check : bool
        Verify the precondition first (costly: runs the closure).

    Raises
    ------
    NotTreeRepresentable
        If ``g`` is not rigid and totally loose, or the construction does not
        yield a tree.

    Examples
    --------
    >>> from rigaug.fixtures import TWOK4
    >>> [str(x) for x in build_tree_rep(TWOK4).nodes]
    ['S{0,1,2,3}', 'S{2,3,4,5}', 'Q{2,3}']
    """
    from .linkedness import is_totally_loose2
    from .rigidity import is_rigid2

    if g.n < 3:
        raise NotTreeRepresentable("needs at least 3 vertices")
    if check and not (is_rigid2(g) and is_totally_loose2(g)):
        raise NotTreeRepresentable("graph is not rigid and totally loose")
    nodes, edges = _build(g, list(range(g.n)))
    t = tree_from_nodes(nodes, edges, g)
    if not nx.is_tree(t.to_networkx()):
        raise NotTreeRepresentable("node graph is not a tree")
    return t


def reduce_tree_rep(t):
    """Drop S-leaves contained in their neighbour, repeatedly."""
    nodes = list(t.nodes)
    edges = {(nodes[a], nodes[b]) for a, b in t.tree_edges}
    changed = True
    while changed and len(nodes) > 1:
        changed = False
        for x in nodes:
            if x.kind is not NodeKind.S:
                continue
            nb = [b if a == x else a for a, b in edges if x in (a, b)]
            if len(nb) == 1 and set(x.vertices) <= set(nb[0].vertices):
                nodes.remove(x)
                edges = {e for e in edges if x not in e}
                changed = True
                break
    return tree_from_nodes(nodes, edges, t.owner)


def private_vertices(t, i):
    """Vertices of node ``i`` that belong to no other node."""
    others = set()
    for j, x in enumerate(t.nodes):
        if j != i:
            others.update(x.vertices)
    return [v for v in t.nodes[i].vertices if v not in others]


def map_edge(t, u, v):
    """Endpoints of the shortest tree path joining the subtrees of ``u`` and ``v``.

    Raises
    ------
    AlreadyEdge
        If ``uv`` is an edge of the owner graph.
    """
    if t.owner is not None and t.owner.has_edge(u, v):
        raise AlreadyEdge(f"({u}, {v}) is an edge")
    tu, tv = set(t.containing(u)), set(t.containing(v))
    common = sorted(tu & tv)
    if common:
        return TreeEdgeRef(common[0], common[0])
    adj = {i: t.neighbors(i) for i in range(len(t.nodes))}
    parent = {x: None for x in sorted(tu)}
    queue = deque(sorted(tu))
    while queue:
        x = queue.popleft()
        if x in tv:
            start = x
            while parent[start] is not None:
                start = parent[start]
            return TreeEdgeRef(start, x)
        for y in adj[x]:
            if y not in parent:
                parent[y] = x
                queue.append(y)
    raise NotTreeRepresentable(f"vertices {u} and {v} are not both in the tree")


def project_costs(t, c):
    """Cheapest original pair for every node pair ``XY`` (loops included).

    Returns
    -------
    (CostFn, dict)
        Costs on node-index pairs (INF when not realised) and the witness
        ``{(X, Y): (u, v)}`` attaining each minimum, ties broken by ``(u, v)``.
    """
    best = {}
    for u, v in t.owner.non_edges():
        cost = c(u, v)
        if cost == INF:
            continue
        key = map_edge(t, u, v).key()
        cur = best.get(key)
        if cur is None or (cost, u, v) < cur:
            best[key] = (cost, u, v)
    return CostFn({k: val[0] for k, val in best.items()}), {k: (val[1], val[2]) for k, val in best.items()}


def tree_multigraph(t, refs):
    """``nx.MultiGraph`` of the tree plus the mapped pairs ``refs`` (loops kept)."""
    m = nx.MultiGraph()
    m.add_nodes_from(range(len(t.nodes)))
    m.add_edges_from(t.tree_edges)
    m.add_edges_from((r.x, r.y) for r in refs)
    return m


def _covered_and_cuts(t, refs):
    m = tree_multigraph(t, refs)
    loops = {r.x for r in refs if r.is_loop}
    m.remove_edges_from(list(nx.selfloop_edges(m)))
    bridges = {tuple(sorted(e)) for e in nx.bridges(m)}
    covered = set(loops)
    for a, b in m.edges():
        if (min(a, b), max(a, b)) not in bridges:
            covered.update((a, b))
    cuts = set(nx.articulation_points(nx.Graph(m)))
    return covered, cuts


def check_augmentation(g, t, new_edges):
    """Whether adding ``new_edges`` to ``g`` gives a globally rigid graph, read off the tree.

    Every H node must lie on a cycle of the tree plus the mapped pairs
    (parallel copies form a 2-cycle; a loop covers the node it sits on) and
    no Q node may be a cut vertex.

    Raises
    ------
    AlreadyEdge
        If some new pair is already an edge of ``g``.
    """
    new_edges = list(new_edges)
    for u, v in new_edges:
        if g.has_edge(u, v):
            raise AlreadyEdge(f"({u}, {v}) is an edge")
    refs = [map_edge(t, u, v) for u, v in new_edges]
    covered, cuts = _covered_and_cuts(t, refs)
    if any(i not in covered for i in t.indices(NodeKind.H)):
        return False
    return not any(i in cuts for i in t.indices(NodeKind.Q))


_SHAPES = {NodeKind.H: "square", NodeKind.S: "circle", NodeKind.Q: "diamond"}


def to_dot(t, name="T"):
    """DOT text; shapes square = H, circle = S, diamond = Q."""
    lines = [f"graph {name} {{"]
    for i, x in enumerate(t.nodes):
        lines.append(f'  n{i} [label="{x}", shape={_SHAPES[x.kind]}];')
    for a, b in t.tree_edges:
        lines.append(f"  n{a} -- n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"

