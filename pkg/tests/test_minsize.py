import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rigaug.costs import CostFn
from rigaug.errors import NotRigid, SpecialCase
from rigaug.fixtures import C4, K4, K4E, K5E, TRIK4, TWOK4
from rigaug.graph import Graph, block_cut_tree
from rigaug.minsize import (
    biconnect_augment_exact,
    biconnect_lower_bound,
    c_of_g,
    min_size_augment,
    tree_2ec_noncut,
    untied_ends,
)
from rigaug.oracles import brute_biconnect_augment, brute_min_gra, cut_vertices
from rigaug.rigidity import is_globally_rigid2

from generators import laman, random_tree

K33 = Graph(6, [(a, b) for a in range(3) for b in range(3, 6)])


def two_edge_connected(n, edges):
    m = nx.MultiGraph()
    m.add_nodes_from(range(n))
    m.add_edges_from(edges)
    return nx.is_connected(m) and nx.edge_connectivity(m) >= 2 if n > 1 else True


@pytest.mark.parametrize("g,expected", [(TWOK4, 2), (TRIK4, 3), (K4, 1), (C4, 2)])
def test_c_of_g_examples(g, expected):
    assert c_of_g(g) == expected


def test_untied_ends_examples():
    assert untied_ends(TWOK4) == [[0, 1], [4, 5]]
    assert untied_ends(TRIK4) == [[2, 3], [4, 5], [6, 7]]
    with pytest.raises(SpecialCase):
        untied_ends(K5E)
    with pytest.raises(NotRigid):
        untied_ends(C4)


def test_tree_2ec_noncut_examples():
    assert tree_2ec_noncut(Graph(3, [(0, 1), (1, 2)]), [1]) == [(0, 2)]
    star = Graph(5, [(0, i) for i in range(1, 5)])
    assert len(tree_2ec_noncut(star, [0])) == 3
    spider = Graph(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
    assert len(tree_2ec_noncut(spider, [])) == 2


@given(st.integers(3, 9), st.integers(0, 10**6))
@settings(max_examples=60, deadline=None)
def test_tree_2ec_noncut_size_and_validity(n, seed):
    rng = random.Random(seed)
    t = random_tree(n, rng)
    Q = [v for v in range(n) if rng.random() < 0.4]
    added = tree_2ec_noncut(t, Q)
    leaves = sum(1 for v in range(n) if t.degree(v) == 1)
    bq = max((t.degree(q) for q in Q), default=0)
    assert len(added) == max((leaves + 1) // 2, bq - 1)
    edges = list(t.edges) + added
    assert two_edge_connected(n, edges)
    assert not set(Q) & set(cut_vertices(n, edges))


def test_biconnect_exact_matches_brute_force():
    rng = random.Random(51)
    for _ in range(60):
        t = random_tree(rng.randint(2, 7), rng)
        h = t.add_edges(rng.sample(t.non_edges(), min(len(t.non_edges()), rng.randint(0, 2))))
        added = biconnect_augment_exact(h)
        opt, _ = brute_biconnect_augment(h, CostFn.uniform(1))
        assert len(added) == opt == biconnect_lower_bound(h)
        bct = block_cut_tree(h.add_edges(added))
        assert not bct.cut_vertices


@pytest.mark.parametrize("g,opt,l,cg", [(TWOK4, 1, 2, 2), (TRIK4, 2, 3, 3), (K4E, 1, 2, 2), (K4, 0, 0, 1)])
def test_min_size_examples(g, opt, l, cg):
    r = min_size_augment(g)
    assert (r.opt, r.l, r.cG) == (opt, l, cg)
    assert r.opt == r.formula == len(r.solution)
    assert r.certified and is_globally_rigid2(g.add_edges(r.solution))


def test_min_size_k4e_adds_missing_pair():
    assert min_size_augment(K4E).solution == [(2, 3)]


def test_min_size_sngr_special_case():
    r = min_size_augment(K33)
    assert (r.special, r.opt, r.l) == ("SNGR", 1, 1)
    assert r.certified


def test_min_size_rejects_flexible_graph():
    with pytest.raises(NotRigid):
        min_size_augment(C4)


def test_min_size_random_against_brute_force():
    rng = random.Random(52)
    for _ in range(25):
        g = laman(rng.randint(4, 7), rng, rng.randint(0, 1))
        r = min_size_augment(g)
        opt, _ = brute_min_gra(g, CostFn.uniform(1))
        assert r.opt == opt == r.formula and r.certified
        if r.special is None and r.opt:
            assert r.opt == max((r.t_reduced + 1) // 2, r.bQ_reduced - 1)


def test_report_dict():
    d = min_size_augment(TWOK4).to_dict()
    assert d["opt"] == 1 and d["solution"] == [[0, 4]] and d["special"] is None
