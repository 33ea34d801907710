import pytest
from hypothesis import given, settings

from graphgen import FIXTURES, graph_strategy
from wlpa import NodAutomaton, enumerate_quasicycles, implies, is_selfconnected, load_fixture
from wlpa.oracle import brute_implies, brute_selfconnected, connector_exists, connectors, default_bound

SMALL = ["triangle", "double_edge", "heavy_fork", "ladder_sink_n1", "rose_n1_k1", "rose_n2_k0"]


@pytest.mark.parametrize("name", SMALL)
@pytest.mark.parametrize("bound", [1, 2, 3, 5])
def test_layered_search_matches_plain_enumeration(name, bound):
    aut = NodAutomaton(load_fixture(name))
    words = enumerate_quasicycles(aut)[:8]
    for p in words:
        for q in words:
            found = next(connectors(aut, p.word, q.word, bound), None) is not None
            assert connector_exists(aut, p.word, q.word, bound) == found


def test_connectors_satisfy_definition():
    g = load_fixture("double_edge")
    aut = NodAutomaton(g)
    p = g.word("e.2 f.1 g.1* e.2*")
    seen = list(connectors(aut, p, p, 4))
    assert seen
    for o in seen:
        assert o[:len(p)] != p
        assert aut.is_nod_path(p + o + p)


def test_loop_has_only_power_connectors():
    g = load_fixture("rose_n1_k0")
    aut = NodAutomaton(g)
    p = g.word("e1.1")
    assert not connector_exists(aut, p, p, 10)
    assert list(connectors(aut, p, p, 4)) == []


@pytest.mark.parametrize("name", FIXTURES)
def test_reductions_match_brute_force(name):
    aut = NodAutomaton(load_fixture(name))
    words = enumerate_quasicycles(aut)
    for p in words:
        assert is_selfconnected(aut, p) == brute_selfconnected(aut, p)
    reps = words[:40]
    for p in reps:
        for q in reps:
            assert implies(aut, p, q) == brute_implies(aut, p, q)


@settings(max_examples=150, deadline=None)
@given(graph_strategy(max_vertices=4, max_edges=5, max_weight=2))
def test_reductions_match_brute_force_random(g):
    aut = NodAutomaton(g)
    words = enumerate_quasicycles(aut)[:20]
    for p in words:
        assert is_selfconnected(aut, p) == brute_selfconnected(aut, p)
        for q in words:
            assert implies(aut, p, q) == brute_implies(aut, p, q)


def test_default_bound():
    aut = NodAutomaton(load_fixture("triangle"))
    assert default_bound(aut) == 16
