"""Graph generators shared by the test modules."""

from __future__ import annotations

import itertools
import random
from collections import Counter
from collections.abc import Iterator

from hypothesis import strategies as st

from wlpa import WeightedGraph, load_fixture
from wlpa.fd import is_aquasicyclic
from wlpa.graph import Edge
from wlpa.io import fixture_names

FIXTURES = fixture_names()

# Fixtures whose literal quasi-cycle listing finishes in a few seconds.
LITERAL_OK = [n for n in FIXTURES
              if n not in {"ladder_sink_n3", "rose_n2_k1", "rose_n3_k0", "fd_line", "ladder_n3",
                           "rose_n2_k0", "ladder_sink_n2"}]

FINITE = [n for n in FIXTURES if is_aquasicyclic(load_fixture(n))]


def make_graph(n: int, arcs, weights=None) -> WeightedGraph:
    vs = [f"v{i}" for i in range(n)]
    weights = weights or [1] * len(arcs)
    return WeightedGraph(vs, [Edge(f"e{k}", vs[a], vs[b], w)
                              for k, ((a, b), w) in enumerate(zip(arcs, weights))])


def all_unweighted(max_vertices: int = 3, max_edges: int = 4) -> Iterator[WeightedGraph]:
    """Every unweighted graph on up to ``max_vertices`` labelled vertices with up
    to ``max_edges`` edges, parallel edges and loops included (one per edge multiset)."""
    for n in range(1, max_vertices + 1):
        pairs = list(itertools.product(range(n), repeat=2))
        for k in range(max_edges + 1):
            for arcs in itertools.combinations_with_replacement(pairs, k):
                yield make_graph(n, arcs)


def random_graph(rng: random.Random, max_vertices: int = 5, max_edges: int = 6,
                 max_weight: int = 1) -> WeightedGraph:
    n = rng.randint(1, max_vertices)
    k = rng.randint(0, max_edges)
    arcs = [(rng.randrange(n), rng.randrange(n)) for _ in range(k)]
    weights = [rng.randint(1, max_weight) for _ in range(k)]
    return make_graph(n, arcs, weights)


def random_dag(rng: random.Random, max_vertices: int = 5, max_edges: int = 7,
               max_weight: int = 3) -> WeightedGraph:
    n = rng.randint(2, max_vertices)
    k = rng.randint(1, max_edges)
    arcs = [tuple(sorted(rng.sample(range(n), 2))) for _ in range(k)]
    # Mostly weight 1; heavy edges rarely survive the aquasicyclic filter in bulk.
    weights = [1 if rng.random() < 0.6 else rng.randint(2, max_weight) for _ in range(k)]
    return make_graph(n, arcs, weights)


def random_aquasicyclic(rng: random.Random, max_vertices: int = 5, max_edges: int = 7,
                        max_weight: int = 3, weighted: bool = True) -> WeightedGraph:
    """Rejection sampling: random forward-edge graphs, keeping the aquasicyclic ones
    (and, with ``weighted``, only those that have a weighted edge)."""
    while True:
        g = random_dag(rng, max_vertices, max_edges, max_weight)
        if (not weighted or not g.is_unweighted()) and is_aquasicyclic(g):
            return g


def graph_strategy(max_vertices: int = 5, max_edges: int = 7, max_weight: int = 3):
    """Hypothesis strategy for small weighted graphs with loops and parallel edges."""
    def build(n, arcs, weights):
        return make_graph(n, [(a % n, b % n) for a, b in arcs], weights[:len(arcs)])

    return st.builds(
        build,
        st.integers(1, max_vertices),
        st.lists(st.tuples(st.integers(0, max_vertices - 1), st.integers(0, max_vertices - 1)),
                 max_size=max_edges),
        st.lists(st.integers(1, max_weight), min_size=max_edges, max_size=max_edges),
    )


# Subscripted names in the printed examples and the names the pipeline generates.
RENAME = {"u2": "u_2", "u1": "u_1", "u11": "u_1_1", "u12": "u_1_2", "v12": "v_1_2"}


def shape(vertices, arcs):
    """Vertex set and incidence multiset, with weights, after renaming."""
    r = lambda v: RENAME.get(v, v)  # noqa: E731
    return {r(v) for v in vertices}, Counter((r(s), r(t), w) for s, t, w in arcs)


def shape_of(g: WeightedGraph):
    return set(g.vertices), Counter((e.source, e.range, e.weight) for e in g.edges)
