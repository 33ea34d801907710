import itertools

import pytest
from hypothesis import given, settings

from graphgen import FIXTURES, graph_strategy
from wlpa import (GraphError, NodAutomaton, QcClass, QuasiCycle, all_bases, enumerate_quasicycles,
                  is_quasicycle, is_selfconnected, load_fixture, quasicycle_classes)
from wlpa.gk import (GkResult, Growth, gk_dimension, graph_cycles, heavy_vertex_witness,
                     longest_chain, max_chain, quick_exponential_check, unweighted_gk,
                     unweighted_gk_inputs)
from wlpa.oracle import brute_implies

GOLDEN = {
    "bounded_fork": 0,
    "heavy_fork": None,
    "double_edge": None,
    "triangle": 2,
    "fd_line": 0,
    "split_fork": 0,
    "rose_n1_k0": 1,
    "rose_n1_k1": None,
    "rose_n1_k2": None,
    "rose_n2_k0": None,
    "rose_n2_k1": None,
    "rose_n3_k0": None,
    "ladder_n1": 1,
    "ladder_n2": 3,
    "ladder_n3": 5,
    "ladder_sink_n1": 2,
    "ladder_sink_n2": 4,
    "ladder_sink_n3": 6,
}


def test_golden_table_covers_every_fixture():
    assert sorted(GOLDEN) == FIXTURES


@pytest.mark.parametrize("name", FIXTURES)
def test_golden_dimension(name):
    result = gk_dimension(load_fixture(name))
    assert result.dimension == GOLDEN[name]
    assert result.polynomial == (GOLDEN[name] is not None)


@pytest.mark.parametrize("name", FIXTURES)
def test_witness_and_chain_are_genuine(name):
    g = load_fixture(name)
    aut = NodAutomaton(g)
    result = gk_dimension(g, aut=aut)
    if not result.polynomial:
        assert is_quasicycle(aut, result.witness)
        assert is_selfconnected(aut, result.witness)
        return
    chain = result.chain or ()
    assert len(chain) == result.dimension
    assert len({QcClass.of(p).canonical for p in chain}) == len(chain)
    for p, q in zip(chain, chain[1:]):
        assert brute_implies(aut, p, q)
    assert (result.dimension == 0) == (enumerate_quasicycles(aut) == [])


def test_triangle_chain():
    result = gk_dimension(load_fixture("triangle"))
    assert [str(p) for p in result.chain] == ["e.2* g.1 f.1*", "e.2 f.1 g.1*"]


def test_ladder_chain_shape():
    result = gk_dimension(load_fixture("ladder_sink_n2"))
    assert [str(p) for p in result.chain] == ["g1.1", "g2.1", "g2.1*", "g1.1*"]
    result = unweighted_gk(load_fixture("ladder_sink_n2").hereditary_subgraph(["x1", "x2", "x3"]))
    assert result.summary() == ("polynomial", 4)


def test_exponential_json_has_no_number():
    out = gk_dimension(load_fixture("double_edge")).to_json()
    assert out == {"growth": "exponential", "witness": "e.1 f.1 g.1* e.2*"}
    assert gk_dimension(load_fixture("bounded_fork")).to_json() == {"growth": "polynomial", "gk_dimension": 0}


def test_result_invariants_enforced():
    with pytest.raises(AssertionError):
        GkResult(Growth.POLYNOMIAL, 1)
    with pytest.raises(AssertionError):
        GkResult(Growth.EXPONENTIAL, 3)


def test_quick_check():
    assert quick_exponential_check(load_fixture("heavy_fork")) == "v"
    assert quick_exponential_check(load_fixture("rose_n2_k1")) == "v"
    assert quick_exponential_check(load_fixture("bounded_fork")) is None


def test_heavy_witnesses():
    fork = load_fixture("heavy_fork")
    assert str(heavy_vertex_witness(NodAutomaton(fork), "v")) == "f.2 f.2*"
    assert str(heavy_vertex_witness(NodAutomaton(fork, {"v": "f"}), "v")) == "e.2 e.2*"
    rose = load_fixture("rose_n2_k0")
    assert str(heavy_vertex_witness(NodAutomaton(rose), "v")) == "e2.2"
    aut = NodAutomaton(fork)
    # Connector used in the exponential-growth construction.
    assert aut.is_nod_path(fork.word("f.2 f.2* f.2 f.1* f.2 f.2*"))


@pytest.mark.parametrize("name", FIXTURES)
def test_base_choice_invariance(name):
    g = load_fixture(name)
    assert len({gk_dimension(g, b).summary() for b in all_bases(g)}) == 1


def test_unweighted_fast_path_rejects_weights():
    with pytest.raises(GraphError):
        unweighted_gk(load_fixture("triangle"))


def test_unweighted_examples():
    assert unweighted_gk(load_fixture("rose_n1_k0")).summary() == ("polynomial", 1)
    assert unweighted_gk(load_fixture("rose_n1_k1")).summary() == ("exponential", None)
    assert unweighted_gk(load_fixture("rose_n1_k2")).summary() == ("exponential", None)
    line = load_fixture("fd_line").hereditary_subgraph(["b", "c"])
    assert unweighted_gk(line).summary() == ("polynomial", 0)


def test_graph_cycles_keep_parallel_edges():
    g = load_fixture("rose_n1_k1")
    assert [[e.name for e in c] for c in graph_cycles(g)] == [["e1"], ["e2"]]


def test_unweighted_inputs():
    g = load_fixture("ladder_sink_n3").hereditary_subgraph(["x1", "x2", "x3", "x4"])
    inputs = unweighted_gk_inputs(g)
    assert (inputs.d1, inputs.d2) == (3, 3)
    g = load_fixture("ladder_n3").hereditary_subgraph(["x1", "x2", "x3"])
    inputs = unweighted_gk_inputs(g)
    assert (inputs.d1, inputs.d2) == (3, 2)


def test_longest_chain_dag_and_cycle():
    # 0 -> 1 -> 2 and 0 -> 2
    rel = {(0, 1), (1, 2), (0, 2)}
    assert longest_chain(3, lambda a, b: (a, b) in rel) == [0, 1, 2]
    assert longest_chain(3, lambda a, b: (a, b) in rel, ends=[1]) == [0, 1]
    cyc = {(0, 1), (1, 2), (2, 0)}
    assert longest_chain(3, lambda a, b: (a, b) in cyc) == [0, 1, 2]
    assert longest_chain(0, lambda a, b: True) == []


def word_level_chain(aut):
    """Longest chain p1 => ... => pk over quasi-cycle words with distinct classes."""
    words = enumerate_quasicycles(aut)
    cls = {p: QcClass.of(p).canonical for p in words}
    best = 0

    def dfs(p, used, depth):
        nonlocal best
        best = max(best, depth)
        for q in words:
            if cls[q] not in used and brute_implies(aut, p, q):
                dfs(q, used | {cls[q]}, depth + 1)

    for p in words:
        dfs(p, {cls[p]}, 1)
    return best


@pytest.mark.parametrize("name", ["triangle", "ladder_n1", "ladder_n2", "ladder_sink_n1",
                                  "ladder_sink_n2", "rose_n1_k0", "bounded_fork"])
def test_max_chain_matches_word_level_search(name):
    aut = NodAutomaton(load_fixture(name))
    d, _ = max_chain(aut, quasicycle_classes(aut))
    assert d == word_level_chain(aut)


@settings(max_examples=80, deadline=None)
@given(graph_strategy(max_vertices=4, max_edges=4, max_weight=2))
def test_max_chain_matches_word_level_search_random(g):
    aut = NodAutomaton(g)
    result = gk_dimension(g, aut=aut)
    if result.polynomial and len(enumerate_quasicycles(aut)) <= 12:
        assert result.dimension == word_level_chain(aut)


@settings(max_examples=150, deadline=None)
@given(graph_strategy(max_vertices=4, max_edges=5, max_weight=3))
def test_quick_check_implies_exponential(g):
    if quick_exponential_check(g) is not None:
        for base in itertools.islice(all_bases(g), 4):
            aut = NodAutomaton(g, base)
            assert any(is_selfconnected(aut, p) for p in enumerate_quasicycles(aut))


@settings(max_examples=150, deadline=None)
@given(graph_strategy(max_vertices=4, max_edges=5, max_weight=1))
def test_unweighted_agrees_with_general(g):
    assert unweighted_gk(g).summary() == gk_dimension(g).summary()
    result = unweighted_gk(g)
    if result.polynomial and result.dimension:
        inputs = unweighted_gk_inputs(g)
        assert inputs.d2 <= inputs.d1


def test_quasicycle_round_trip_text():
    g = load_fixture("double_edge")
    assert str(QuasiCycle(g.word("e.2 f.1 g.1* e.2*"))) == "e.2 f.1 g.1* e.2*"
