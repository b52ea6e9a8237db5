"""Weak global linkedness in the plane and the totally loose closure.

A non-adjacent pair is decided by a fixed pipeline: rank test, local
connectivity, restriction to its block, the 2-separator rule, and finally a
global rigidity test on the clique hull of a circuit inside the 3-block.
"""
from __future__ import annotations

import enum
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations

import networkx as nx

from .errors import AlreadyEdge, InvalidPair, PreconditionFailed
from .graph import _components_without, clique_hull, kappa, three_block
from .rigidity import _circuit_from_state, is_globally_rigid2, is_rigid2, pebble_base

__all__ = [
    "Verdict",
    "Reason",
    "WglVerdict",
    "is_wgl2",
    "wgl_pairs",
    "tlc2",
    "is_totally_loose2",
    "is_sngr2",
    "rigid_component",
    "sp",
    "sp_star",
    "tlc_plus_clique",
]


class Verdict(enum.Enum):
    GloballyLoose = "GloballyLoose"
    WeaklyGloballyLinked = "WeaklyGloballyLinked"
    GloballyLinkedTrivially = "GloballyLinkedTrivially"


class Reason(enum.Enum):
    NotLinked = "NotLinked"
    KappaAtMost2 = "KappaAtMost2"
    TwoSeparatorRule = "TwoSeparatorRule"
    CliqueHullGloballyRigid = "CliqueHullGloballyRigid"
    CliqueHullNotGloballyRigid = "CliqueHullNotGloballyRigid"
    # only reported by the CLI for pairs that are already edges
    Adjacent = "Adjacent"


@dataclass(frozen=True)
class WglVerdict:
    verdict: Verdict
    reason: Reason

    @property
    def linked(self):
        return self.verdict is not Verdict.GloballyLoose


_LOOSE = Verdict.GloballyLoose
_WGL = Verdict.WeaklyGloballyLinked


def _block_of(g, u, v):
    for blk in nx.biconnected_components(g.to_networkx()):
        if u in blk and v in blk:
            return sorted(blk)
    return None


def _decide(g, u, v, game):
    # game: a pebble state holding a base of g (shared, only queried)
    if game.is_independent(u, v):
        return WglVerdict(_LOOSE, Reason.NotLinked)
    if kappa(g, u, v) <= 2:
        return WglVerdict(_LOOSE, Reason.KappaAtMost2)
    block, labels = g.induced(_block_of(g, u, v))
    bu, bv = labels.index(u), labels.index(v)
    if len(_components_without(block, (bu, bv))) >= 2:
        return WglVerdict(_WGL, Reason.TwoSeparatorRule)
    b, blabels = three_block(block, bu, bv)
    tu, tv = blabels.index(bu), blabels.index(bv)
    bgame, base, _ = pebble_base(b)
    if bgame.is_independent(tu, tv):
        # linkedness is inherited by the 3-block; kept as a guard
        return WglVerdict(_LOOSE, Reason.NotLinked)
    circuit = _circuit_from_state(bgame, base, (min(tu, tv), max(tu, tv)))
    v0 = sorted({x for e in circuit for x in e})
    hull, _ = clique_hull(b, v0)
    if is_globally_rigid2(hull):
        return WglVerdict(_WGL, Reason.CliqueHullGloballyRigid)
    return WglVerdict(_LOOSE, Reason.CliqueHullNotGloballyRigid)


def is_wgl2(g, u, v):
    """Decide whether the non-adjacent pair ``{u, v}`` is weakly globally linked.

    Returns
    -------
    WglVerdict
        The verdict and the rule that produced it.

    Raises
    ------
    AlreadyEdge
        If ``uv`` is an edge.

    Examples
    --------
    >>> from rigaug.fixtures import C4, K4E
    >>> is_wgl2(C4, 0, 2).reason.value, is_wgl2(K4E, 2, 3).reason.value
    ('NotLinked', 'KappaAtMost2')
    """
    if u == v:
        raise InvalidPair("a pair needs two distinct vertices")
    if g.has_edge(u, v):
        raise AlreadyEdge(f"({u}, {v}) is an edge")
    return _decide(g, u, v, pebble_base(g)[0])


def _verdicts(g, pairs, threads=None):
    game = pebble_base(g)[0]
    if not threads or threads <= 1 or len(pairs) < 2:
        return [_decide(g, u, v, game) for u, v in pairs]
    chunks = [pairs[i::threads] for i in range(threads)]

    def work(chunk):
        local = game.copy()
        return [_decide(g, u, v, local) for u, v in chunk]

    with ThreadPoolExecutor(max_workers=threads) as pool:
        results = list(pool.map(work, chunks))
    out = [None] * len(pairs)
    for i, res in enumerate(results):
        out[i::threads] = res
    return out


def wgl_pairs(g, threads=None):
    """All non-adjacent pairs of ``g`` that are weakly globally linked, sorted."""
    pairs = g.non_edges()
    return [p for p, vd in zip(pairs, _verdicts(g, pairs, threads)) if vd.verdict is _WGL]


def tlc2(g, threads=None):
    """Totally loose closure in the plane.

    All verdicts are computed against ``g`` itself and the weakly globally
    linked pairs are added in one step.

    Examples
    --------
    >>> from rigaug.fixtures import K5E, K5
    >>> tlc2(K5E) == K5
    True
    """
    return g.add_edges(wgl_pairs(g, threads))


def is_totally_loose2(g):
    """Whether every non-adjacent pair is globally loose, i.e. ``tlc2(g) == g``."""
    pairs = g.non_edges()
    if not pairs:
        return True
    game = pebble_base(g)[0]
    return all(_decide(g, u, v, game).verdict is _LOOSE for u, v in pairs)


def is_sngr2(g):
    """Not globally rigid, but globally rigid after adding any single non-edge."""
    if is_globally_rigid2(g):
        return False
    return all(is_globally_rigid2(g.add_edges([p])) for p in g.non_edges())


def rigid_component(g, a, b, game=None):
    """The maximal rigid vertex set containing ``a`` and ``b``, or ``None``.

    ``None`` is returned when ``ab`` is neither an edge nor linked.  A vertex
    ``x`` belongs to the component iff both ``ax`` and ``bx`` lie in the
    closure of ``E`` in the rigidity matroid.
    """
    if game is None:
        game = pebble_base(g)[0]

    def spanned(x, y):
        return g.has_edge(x, y) or not game.is_independent(x, y)

    if not spanned(a, b):
        return None
    return sorted({a, b} | {x for x in range(g.n) if x not in (a, b) and spanned(a, x) and spanned(b, x)})


def _check_rigid_totally_loose(g):
    if not is_rigid2(g) or not is_totally_loose2(g):
        raise PreconditionFailed("graph must be rigid and totally loose")


def sp(g, z, check=True):
    """The unique minimal vertex set containing ``z`` that induces a rigid subgraph.

    A vertex ``w`` outside ``z`` is kept iff ``g - w`` has no rigid induced
    subgraph containing ``z``; by uniqueness of the minimal set this is the
    intersection of all rigid sets containing ``z``.

    Raises
    ------
    PreconditionFailed
        If ``check`` is set and ``g`` is not rigid and totally loose.
    """
    zs = sorted(set(z))
    if not zs:
        raise PreconditionFailed("z must be nonempty")
    if check:
        _check_rigid_totally_loose(g)
    if len(zs) == 1:
        return zs
    z0, z1 = zs[0], zs[1]
    zset = set(zs)
    out = set(zs)
    for w in range(g.n):
        if w in zset:
            continue
        h = g.remove_edges([(w, x) for x in g.neighbors(w)])
        comp = rigid_component(h, z0, z1)
        if comp is None or not zset.issubset(comp):
            out.add(w)
    return sorted(out)


def sp_star(g, z, check=True):
    """``sp(g, z)`` plus every outside vertex with at least 3 neighbours in it."""
    base = sp(g, z, check)
    mask = g.vertex_mask(base)
    extra = [w for w in range(g.n) if not (mask >> w) & 1 and (g.adj[w] & mask).bit_count() >= 3]
    return sorted(set(base) | set(extra))


def tlc_plus_clique(g, z, check=True):
    """The totally loose closure of ``g + K(z)``, computed as ``g + K(sp*(g, z))``."""
    if len(set(z)) < 2:
        raise PreconditionFailed("z needs at least two vertices")
    return g.add_edges(combinations(sp_star(g, z, check), 2))


def closure_is_complete(g):
    """Convenience: whether ``tlc2(g)`` is complete."""
    return tlc2(g).is_complete()

