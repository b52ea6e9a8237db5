import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rigaug.errors import AlreadyEdge, InvalidPair, NotDependent
from rigaug.fixtures import C4, K4, K4E, K5E, P3, TWOK4, W4
from rigaug.graph import Graph, is_k_connected
from rigaug.oracles import numeric_rank
from rigaug.rigidity import (
    fundamental_circuit,
    global_rigidity_failure,
    is_globally_rigid2,
    is_linked2,
    is_redundantly_rigid2,
    is_rigid2,
    pebble_base,
    r2_bridges,
    r2_components,
    r2_rank,
)

from generators import laman, random_graph


def generic_rank(g):
    return max(numeric_rank(g, 2, s) for s in range(3))


@pytest.mark.parametrize("g,expected", [(K4, 5), (C4, 4), (Graph(4, []), 0), (K4E, 5), (W4, 7)])
def test_rank_examples(g, expected):
    assert r2_rank(g) == expected
    assert generic_rank(g) == expected


@given(st.integers(1, 9), st.integers(0, 10**6))
@settings(max_examples=60, deadline=None)
def test_rank_matches_rigidity_matrix(n, seed):
    g = random_graph(n, random.Random(seed))
    assert r2_rank(g) == generic_rank(g)


@pytest.mark.parametrize("g,expected", [
    (K4E, True), (C4, False), (Graph(2, [(0, 1)]), True), (Graph(1, []), True),
    (Graph(2, []), False), (P3, False),
])
def test_is_rigid_examples(g, expected):
    assert is_rigid2(g) is expected


def test_bridges_examples():
    assert r2_bridges(K4) == []
    assert r2_bridges(K4E) == list(K4E.edges)
    assert r2_bridges(P3) == [(0, 1), (1, 2)]


def test_fundamental_circuit_examples():
    base = [e for e in K4.edges if e != (2, 3)]
    assert fundamental_circuit(K4, base, (2, 3)) == list(K4.edges)
    base, rejected = pebble_base(W4)[1:]
    assert fundamental_circuit(W4, base, rejected[0]) == list(W4.edges)
    with pytest.raises(NotDependent):
        fundamental_circuit(K4, base=[e for e in K4.edges if e != (2, 3)], e=(0, 1))


def test_fundamental_circuit_is_a_circuit():
    rng = random.Random(11)
    for _ in range(40):
        g = laman(rng.randint(4, 8), rng, rng.randint(1, 3))
        _, base, rejected = pebble_base(g)
        for e in rejected:
            circ = fundamental_circuit(g, base, e)
            h = Graph(g.n, circ)
            # dependent, and every proper edge-deletion independent
            assert generic_rank(h) == h.m - 1
            for f in circ:
                assert generic_rank(h.remove_edges([f])) == h.m - 1


def test_components_examples():
    assert r2_components(K4).parts == (K4.edges,)
    assert len(r2_components(K4E).parts) == 5
    two = Graph(8, list(K4.edges) + [(u + 4, v + 4) for u, v in K4.edges])
    assert [len(p) for p in r2_components(two).parts] == [6, 6]


def test_components_brute_force():
    # edges e, f share a component iff some circuit holds both; equivalently rank drops
    rng = random.Random(12)
    for _ in range(40):
        g = random_graph(rng.randint(3, 7), rng, 0.6)
        part = r2_components(g)
        owner = {e: i for i, p in enumerate(part.parts) for e in p}
        r = generic_rank(g)
        for e in g.edges:
            bridge = generic_rank(g.remove_edges([e])) < r
            assert bridge == (len(part.parts[owner[e]]) == 1)


@pytest.mark.parametrize("g,u,v,expected", [
    (K4E, 2, 3, True), (C4, 0, 2, False), (C4, 1, 3, False), (P3, 0, 2, False),
])
def test_is_linked_examples(g, u, v, expected):
    assert is_linked2(g, u, v) is expected


def test_is_linked_errors():
    with pytest.raises(InvalidPair):
        is_linked2(K4E, 1, 1)
    with pytest.raises(AlreadyEdge):
        is_linked2(K4E, 0, 1)


@pytest.mark.parametrize("g,expected", [(K4, True), (K4E, False), (K5E, True), (C4, False)])
def test_redundantly_rigid_examples(g, expected):
    assert is_redundantly_rigid2(g) is expected


@pytest.mark.parametrize("g,expected,failure", [
    (K4, True, None), (K4E, False, "not-3-connected"), (K5E, True, None),
    (C4, False, "not-3-connected"), (TWOK4, False, "not-3-connected"),
    (Graph(3, [(0, 1), (1, 2), (0, 2)]), True, None), (P3, False, "not-complete"),
])
def test_global_rigidity_examples(g, expected, failure):
    assert is_globally_rigid2(g) is expected
    assert global_rigidity_failure(g) == failure


def test_global_rigidity_r2_connectivity_failure():
    # K33 is 3-connected and rigid but every edge is a bridge of the matroid
    k33 = Graph(6, [(a, b) for a in range(3) for b in range(3, 6)])
    assert is_k_connected(k33, 3)
    assert global_rigidity_failure(k33) == "not-R2-connected"
