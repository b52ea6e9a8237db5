"""Cheapest globally rigid supergraph in the plane: the three stages and their driver.

Stage A makes the graph rigid (exact, matroid greedy).  Stages B and C work
on the tree representation of the closure: B removes every 2-separator node
as a cut vertex, C puts every SNGR block on a cycle.  Each stage returns
``(cost, edges)`` with ``(INF, None)`` when no finite-cost solution exists.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import networkx as nx

from .costs import INF, total_cost
from .graph import Graph, block_cut_tree, components
from .linkedness import tlc2
from .rigidity import is_globally_rigid2, pebble_base
from .treerep import NodeKind, build_tree_rep, project_costs

__all__ = [
    "AugResult",
    "problem_a",
    "biconnect_augment_2approx",
    "problem_b_2approx",
    "problem_c_exact_arborescence",
    "problem_c_2approx",
    "algorithm1",
]


def _candidates(pairs, c):
    out = []
    for u, v in pairs:
        cost = c(u, v)
        if cost != INF:
            out.append((cost, u, v))
    out.sort()
    return out


def problem_a(g, c):
    """Cheapest set of new edges making ``g`` rigid (exact).

    Matroid greedy: complement pairs are scanned by ``(cost, u, v)`` and
    kept when they raise the rank, until the rank is ``2n - 3``.

    Examples
    --------
    >>> from rigaug.fixtures import C4
    >>> from rigaug.costs import CostFn
    >>> problem_a(C4, CostFn({(0, 2): 1, (1, 3): 5}))
    (1, [(0, 2)])
    """
    game = pebble_base(g)[0]
    target = 2 * g.n - 3 if g.n >= 2 else 0
    if game.accepted >= target:
        return 0, []
    chosen, cost = [], 0
    for cst, u, v in _candidates(g.non_edges(), c):
        if game.add_edge(u, v):
            chosen.append((u, v))
            cost += cst
            if game.accepted == target:
                return cost, chosen
    return INF, None


def _no_cut_vertex(h):
    return h.n <= 2 or (len(components(h)) == 1 and block_cut_tree(h).cut_vertices == ())


def biconnect_augment_2approx(h, c):
    """New edges removing every cut vertex of a connected graph, within twice the optimum.

    The block-cut tree is rooted at a leaf block.  Each candidate pair
    becomes up to two arcs of a digraph on the tree nodes, together with
    free arcs child-to-parent and block-to-child; the links used by a
    minimum spanning arborescence (Edmonds) form the answer.  Graphs on at
    most two vertices have no cut vertex and need nothing.

    Returns
    -------
    (cost, list or None)
    """
    if _no_cut_vertex(h):
        return 0, []
    bct = block_cut_tree(h)
    nnodes = len(bct.nodes)
    adj = [[] for _ in range(nnodes)]
    for a, b in bct.tree_edges:
        adj[a].append(b)
        adj[b].append(a)
    cuts = set(bct.cut_vertices)
    is_cut = [bct.nodes[i][0] == "C" for i in range(nnodes)]
    root = next(i for i, blk in enumerate(bct.blocks) if len(cuts.intersection(blk)) <= 1)
    parent, depth = [-1] * nnodes, [0] * nnodes
    order, queue = [root], deque([root])
    seen = {root}
    while queue:
        x = queue.popleft()
        for y in sorted(adj[x]):
            if y not in seen:
                seen.add(y)
                parent[y], depth[y] = x, depth[x] + 1
                order.append(y)
                queue.append(y)
    node_of = {v: bct.node_of(v) for v in range(h.n)}

    # cheapest witness per unordered node pair
    links = {}
    for cost, x, y in _candidates(h.non_edges(), c):
        a, b = node_of[x], node_of[y]
        if a == b:
            continue
        key = (min(a, b), max(a, b))
        if key not in links:
            links[key] = (cost, (x, y))

    arcs = {}

    def put(src, dst, cost, link):
        if src == dst or dst == root:
            return
        cur = arcs.get((src, dst))
        if cur is None or (cost, link is not None, link or ()) < (cur[0], cur[1] is not None, cur[1] or ()):
            arcs[(src, dst)] = (cost, link)

    for y in order[1:]:
        put(y, parent[y], 0, None)
        if not is_cut[parent[y]]:
            put(parent[y], y, 0, None)

    def step_towards(anc, x):
        # child of anc on the path to its descendant x
        while parent[x] != anc:
            x = parent[x]
        return x

    for (a, b), (cost, link) in sorted(links.items()):
        x, y = a, b
        while depth[x] > depth[y]:
            x = parent[x]
        while depth[y] > depth[x]:
            y = parent[y]
        while x != y:
            x, y = parent[x], parent[y]
        apex = x
        if apex == a or apex == b:
            top, low = (a, b) if apex == a else (b, a)
            put(step_towards(top, low), low, cost, link)
        else:
            put(step_towards(apex, b), a, cost, link)
            put(step_towards(apex, a), b, cost, link)

    d = nx.DiGraph()
    d.add_nodes_from(range(nnodes))
    for (src, dst), (cost, link) in sorted(arcs.items()):
        d.add_edge(src, dst, weight=cost, link=link)
    try:
        arb = nx.minimum_spanning_arborescence(d, attr="weight", preserve_attrs=True)
    except nx.NetworkXException:
        return INF, None
    chosen = sorted({data["link"] for _, _, data in arb.edges(data=True) if data.get("link") is not None})
    return total_cost(c, chosen), chosen


def _tree_bar(t, U):
    # pairs joined by a tree path whose inner vertices avoid U
    U = set(U)
    pairs = set()
    for x in range(t.n):
        seen = {x}
        queue = deque([x])
        while queue:
            y = queue.popleft()
            if y != x and y in U:
                continue
            for z in t.neighbors(y):
                if z not in seen:
                    seen.add(z)
                    pairs.add((min(x, z), max(x, z)))
                    queue.append(z)
    return Graph(t.n, pairs)


def problem_b_2approx(t, U, c):
    """Cheapest-within-2 new edges so that no vertex of ``U`` is a cut vertex of ``t + F``.

    Every pair joined by a tree path avoiding ``U`` internally is made
    adjacent; the resulting graph's cut vertices lie in ``U`` and those of
    ``U`` are exactly the cut vertices of ``t + F``, so a 2-connectivity
    augmentation of it solves the problem.

    Examples
    --------
    >>> from rigaug.graph import Graph
    >>> from rigaug.costs import CostFn
    >>> problem_b_2approx(Graph(3, [(0, 1), (1, 2)]), [1], CostFn({(0, 2): 1}))
    (1, [(0, 2)])
    """
    if not U:
        return 0, []
    tbar = _tree_bar(t, U)
    return biconnect_augment_2approx(tbar, c)


def problem_c_exact_arborescence(parent, U, paths):
    """Exact cheapest family of vertical paths covering ``U`` in a rooted tree.

    Parameters
    ----------
    parent : sequence
        ``parent[v]`` of each vertex, ``-1`` (or ``None``) at the root.
    U : iterable of vertices
    paths : list of (vertex collection, cost)
        Each collection is the vertex set of a path along the tree towards the root.

    Returns
    -------
    (cost, list of int)
        Indices of the chosen paths, sorted; ``(INF, None)`` if some vertex
        of ``U`` lies on no path.
    """
    n = len(parent)
    par = [-1 if p is None else p for p in parent]
    children = [[] for _ in range(n)]
    roots = []
    for v, p in enumerate(par):
        (roots if p < 0 else children[p]).append(v)
    depth = [0] * n
    post = []
    stack = [(r, False) for r in roots]
    while stack:
        v, done = stack.pop()
        if done:
            post.append(v)
            continue
        stack.append((v, True))
        for ch in children[v]:
            depth[ch] = depth[v] + 1
            stack.append((ch, False))
    U = set(U)
    through = [[] for _ in range(n)]
    for i, (verts, _) in enumerate(paths):
        for x in set(verts):
            through[x].append(i)
    opt = [0] * n
    choice = [None] * n
    for v in post:
        if v not in U:
            opt[v] = sum(opt[r] for r in children[v])
            continue
        best = (INF, None)
        for i in through[v]:
            verts, cost = paths[i]
            seg = {x for x in verts if depth[x] >= depth[v]}
            rest = [r for x in seg for r in children[x] if r not in seg]
            val = cost + sum(opt[r] for r in rest)
            if val < best[0]:
                best = (val, (i, rest))
        opt[v], choice[v] = best
    if any(opt[r] == INF for r in roots):
        return INF, None
    chosen = set()
    todo = list(roots)
    while todo:
        v = todo.pop()
        if v in U:
            i, rest = choice[v]
            chosen.add(i)
            todo.extend(rest)
        else:
            todo.extend(children[v])
    return sum(opt[r] for r in roots), sorted(chosen)


def problem_c_2approx(t, U, c):
    """Cheapest-within-2 new pairs putting every vertex of ``U`` on a cycle of ``t + F``.

    Loops ``(x, x)`` with finite cost are allowed and cover ``x``.  The tree is
    rooted at vertex 0; each candidate pair's path is split at its top vertex
    into two vertical paths, both carrying the full cost, and the exact
    dynamic program picks paths; a pair is kept if either half is picked.
    """
    if not U:
        return 0, []
    parent = [-1] * t.n
    seen = {0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for y in t.neighbors(x):
            if y not in seen:
                seen.add(y)
                parent[y] = x
                queue.append(y)

    def up(x, stop):
        out = [x]
        while x != stop:
            x = parent[x]
            out.append(x)
        return out

    paths, owner = [], []
    for x in range(t.n):
        cost = c(x, x)
        if cost != INF:
            paths.append(([x], cost))
            owner.append((x, x))
    for cost, x, y in _candidates(t.non_edges(), c):
        ax = set(up(x, 0))
        top = y
        while top not in ax:
            top = parent[top]
        for end in (x, y):
            paths.append((up(end, top), cost))
            owner.append((x, y))
    total, idx = problem_c_exact_arborescence(parent, U, paths)
    if total == INF:
        return INF, None
    chosen = sorted({owner[i] for i in idx})
    return total_cost(c, chosen), chosen


@dataclass
class AugResult:
    """Outcome of an augmentation.

    ``cost`` is INF and ``feasible`` false when no finite-cost solution was
    found; ``added`` then lists every missing pair.  ``certified`` records a
    direct check of the target property on ``g + added``.
    """

    added: list
    cost: object
    parts: dict = field(default_factory=dict)
    certified: bool = False
    feasible: bool = True

    def to_dict(self):
        return {
            "added": [list(e) for e in self.added],
            "cost": None if self.cost == INF else self.cost,
            "feasible": self.feasible,
            "certified": self.certified,
            "parts": {k: [list(e) for e in v] for k, v in self.parts.items()},
        }


def _infeasible(g, parts):
    added = g.non_edges()
    return AugResult(added, INF, parts, is_globally_rigid2(g.add_edges(added)), False)


def algorithm1(g, c, threads=None):
    """Globally rigid augmentation within five times the cheapest one.

    Examples
    --------
    >>> from rigaug.fixtures import TWOK4
    >>> from rigaug.costs import CostFn
    >>> r = algorithm1(TWOK4, CostFn.uniform())
    >>> r.added, r.cost, r.certified
    ([(0, 4)], 1, True)
    """
    parts = {"A": [], "B": [], "C": []}
    cost_a, ea = problem_a(g, c)
    if cost_a == INF:
        return _infeasible(g, parts)
    parts["A"] = ea
    h = tlc2(g.add_edges(ea), threads)
    if not h.is_complete():
        t = build_tree_rep(h, check=False)
        ct, witness = project_costs(t, c)
        tree = Graph(len(t.nodes), t.tree_edges)
        cost_b, fb = problem_b_2approx(tree, t.indices(NodeKind.Q), ct)
        cost_c, fc = problem_c_2approx(tree, t.indices(NodeKind.H), ct)
        if cost_b == INF or cost_c == INF:
            return _infeasible(g, parts)
        parts["B"] = sorted({witness[(min(x, y), max(x, y))] for x, y in fb})
        parts["C"] = sorted({witness[(min(x, y), max(x, y))] for x, y in fc})
    added = sorted(set(parts["A"]) | set(parts["B"]) | set(parts["C"]))
    return AugResult(added, total_cost(c, added), parts, is_globally_rigid2(g.add_edges(added)), True)
