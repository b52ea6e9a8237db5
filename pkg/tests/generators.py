"""Seeded random instance generators shared by the test modules."""
from itertools import combinations

from rigaug.costs import INF, CostFn
from rigaug.graph import Graph
from rigaug.kernels import PebbleGame
from rigaug.linkedness import tlc2
from rigaug.rigidity import is_rigid2
from rigaug.treerep import NodeKind, build_tree_rep


def all_pairs(n):
    return list(combinations(range(n), 2))


def random_graph(n, rng, p=None):
    p = rng.random() if p is None else p
    return Graph(n, [e for e in all_pairs(n) if rng.random() < p])


def laman(n, rng, extra=0):
    """Random rigid graph: a greedy independent spanning set plus ``extra`` random edges."""
    pairs = all_pairs(n)
    rng.shuffle(pairs)
    game = PebbleGame(n)
    edges = [p for p in pairs if game.add_edge(*p)]
    rest = [p for p in pairs if p not in set(edges)]
    return Graph(n, edges + rest[:extra])


def rigid_totally_loose(n, rng):
    """``tlc2`` of a random rigid graph, or ``None`` if the closure is complete."""
    h = tlc2(laman(n, rng, rng.randint(0, 2)))
    return None if h.is_complete() else h


def h_rich(n, rng, tries=200):
    """Rigid totally loose graph whose tree has an SNGR block, or ``None``."""
    pairs = all_pairs(n)
    for _ in range(tries):
        g = Graph(n, rng.sample(pairs, 2 * n - 3 + rng.randint(0, 1)))
        if min(g.degree(v) for v in range(n)) < 3 or not is_rigid2(g):
            continue
        h = tlc2(g)
        if h.is_complete():
            continue
        if build_tree_rep(h, check=False).indices(NodeKind.H):
            return h
    return None


def glued_rigid(n, rng):
    """Rigid graph built by gluing triangles and K4s along existing edges (many 2-separators)."""
    edges = [(0, 1), (0, 2), (1, 2)]
    k = 3
    while k < n:
        # reusing the first edge builds fans with large 2-cuts
        a, b = (0, 1) if rng.random() < 0.4 else rng.choice(edges)
        if k + 2 <= n and rng.random() < 0.5:
            x, y = k, k + 1
            edges += [(a, x), (b, x), (a, y), (b, y), (x, y)]
            k += 2
        else:
            edges += [(a, k), (b, k)]
            k += 1
    return Graph(n, edges)


def random_tree(n, rng):
    return Graph(n, [(rng.randrange(i), i) for i in range(1, n)])


def random_chordal(n, d, rng):
    """d-connected chordal graph grown from ``K_{d+1}`` by attaching to subcliques of size >= d."""
    edges = set(combinations(range(d + 1), 2))
    cliques = [tuple(range(d + 1))]
    for v in range(d + 1, n):
        base = rng.choice(cliques)
        nb = rng.sample(base, rng.randint(d, len(base)))
        edges |= {(x, v) for x in nb}
        cliques.append(tuple(sorted(nb)) + (v,))
    return Graph(n, edges)


def random_costs(g, rng, lo=1, hi=20, p_inf=0.0, loops=False):
    pairs = g.non_edges()
    if loops:
        pairs = pairs + [(x, x) for x in range(g.n)]
    return CostFn({p: (INF if rng.random() < p_inf else rng.randint(lo, hi)) for p in pairs})
