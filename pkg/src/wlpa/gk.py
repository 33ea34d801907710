"""Growth type and Gelfand-Kirillov dimension."""

from __future__ import annotations

import enum
from collections.abc import Callable, Collection, Mapping, Sequence
from dataclasses import dataclass
from graphlib import CycleError, TopologicalSorter

from .graph import Edge, GraphError, WeightedGraph
from .nod import NodAutomaton
from .quasicycles import (QcClass, QuasiCycle, implies, is_quasicycle,
                          is_selfconnected, quasicycle_classes)


class Growth(str, enum.Enum):
    POLYNOMIAL = "polynomial"
    EXPONENTIAL = "exponential"


@dataclass(frozen=True)
class GkResult:
    growth: Growth
    dimension: int | None = None
    witness: QuasiCycle | None = None
    chain: tuple[QuasiCycle, ...] | None = None

    def __post_init__(self):
        if self.growth is Growth.POLYNOMIAL:
            assert self.witness is None and self.dimension is not None
            assert (self.chain is None) == (self.dimension == 0)
            assert self.chain is None or len(self.chain) == self.dimension
        else:
            assert self.witness is not None and self.dimension is None

    @property
    def polynomial(self) -> bool:
        return self.growth is Growth.POLYNOMIAL

    def summary(self) -> tuple[str, int | None]:
        return self.growth.value, self.dimension

    def to_json(self) -> dict:
        out: dict = {"growth": self.growth.value}
        if self.polynomial:
            out["gk_dimension"] = self.dimension
            if self.chain:
                out["chain"] = [str(p) for p in self.chain]
        else:
            out["witness"] = str(self.witness)
        return out


def longest_chain(n: int, related: Callable[[int, int], bool],
                  ends: Collection[int] | None = None) -> list[int]:
    """Longest sequence of distinct nodes ``0..n-1`` with consecutive ones related.

    With ``ends`` given, only sequences whose last node is in ``ends`` count.
    Ties go to the lexicographically least sequence. An acyclic relation is
    handled by a memoised longest-path pass, anything else by trying every
    simple path.
    """
    ends = set(range(n)) if ends is None else set(ends)
    arcs = {a: [b for b in range(n) if b != a and related(a, b)] for a in range(n)}
    try:
        order = list(TopologicalSorter(arcs).static_order())
    except CycleError:
        return _longest_simple_path(arcs, ends)
    best: dict[int, tuple[int, ...]] = {}
    for a in order:  # successors come first
        options = [(a,) + best[b] for b in arcs[a] if b in best]
        if a in ends:
            options.append((a,))
        if options:
            best[a] = min(options, key=_rank)
    return list(min(best.values(), key=_rank)) if best else []


def _rank(path: tuple[int, ...]) -> tuple:
    return -len(path), path


def _longest_simple_path(arcs: Mapping[int, list[int]], ends: set[int]) -> list[int]:
    best: tuple[int, ...] = ()

    def dfs(path: list[int]) -> None:
        nonlocal best
        if path[-1] in ends and (not best or _rank(tuple(path)) < _rank(best)):
            best = tuple(path)
        for b in arcs[path[-1]]:
            if b not in path:
                path.append(b)
                dfs(path)
                path.pop()

    for a in arcs:
        dfs([a])
    return list(best)


# -- heavy vertex shortcut ---------------------------------------------------

def quick_exponential_check(g: WeightedGraph) -> str | None:
    """First vertex emitting two distinct edges of weight at least 2."""
    for v in g.vertices:
        if sum(1 for e in g.out_edges(v) if e.weight >= 2) >= 2:
            return v
    return None


def heavy_vertex_witness(aut: NodAutomaton, v: str) -> QuasiCycle:
    """Selfconnected quasi-cycle built from a heavy non-base edge at ``v``.

    With ``f`` such an edge, ``f.2`` (when ``f`` is a loop) or ``f.2 f.2*``
    is a quasi-cycle, and ``f.2*`` resp. ``f.2 f.1*`` connects it to itself.
    """
    g = aut.graph
    f = next(e for e in g.out_edges(v) if e.weight >= 2 and e.name != aut.base[v])
    f2 = g.letter(f.name, 2)
    p = QuasiCycle((f2,) if f.range == v else (f2, f2.star()))
    if not (is_quasicycle(aut, p.word) and is_selfconnected(aut, p)):
        raise AssertionError(f"heavy-vertex witness {p} is not a selfconnected quasi-cycle")
    return p


# -- general algorithm -------------------------------------------------------

def max_chain(aut: NodAutomaton, classes: Sequence[QcClass]) -> tuple[int, list[QuasiCycle]]:
    """Longest chain of pairwise inequivalent quasi-cycles, on canonical words."""
    reps = [c.canonical for c in classes]
    idx = longest_chain(len(reps), lambda a, b: implies(aut, reps[a], reps[b]))
    return len(idx), [reps[i] for i in idx]


def gk_dimension(g: WeightedGraph, base: Mapping[str, str] | None = None,
                 aut: NodAutomaton | None = None) -> GkResult:
    aut = aut or NodAutomaton(g, base)
    v = quick_exponential_check(g)
    if v is not None:
        return GkResult(Growth.EXPONENTIAL, witness=heavy_vertex_witness(aut, v))
    classes = quasicycle_classes(aut)
    for c in classes:
        if is_selfconnected(aut, c.canonical):
            return GkResult(Growth.EXPONENTIAL, witness=c.canonical)
    d, chain = max_chain(aut, classes)
    return GkResult(Growth.POLYNOMIAL, d, chain=tuple(chain) if d else None)


# -- unweighted graphs ---------------------------------------------------------

@dataclass(frozen=True)
class UnweightedGkInputs:
    cycles: tuple[tuple[Edge, ...], ...]
    d1: int
    d2: int
    chain_all: tuple[int, ...]
    chain_exit: tuple[int, ...]


def graph_cycles(g: WeightedGraph) -> list[tuple[Edge, ...]]:
    """Cyclic paths of ``g`` (no repeated source vertex), one per edge set.

    Each is rooted at its least vertex; parallel edges give distinct cycles.
    """
    pos = g.vertex_position
    found = []

    def extend(path: list[Edge], visited: set[str], root: str) -> None:
        for e in g.out_edges(path[-1].range):
            if e.range == root:
                found.append(tuple(path) + (e,))
            elif pos(e.range) > pos(root) and e.range not in visited:
                visited.add(e.range)
                path.append(e)
                extend(path, visited, root)
                path.pop()
                visited.discard(e.range)

    for root in g.vertices:
        for e in g.out_edges(root):
            if e.range == root:
                found.append((e,))
            elif pos(e.range) > pos(root):
                extend([e], {root, e.range}, root)
    return found


def _vertices_of(cycle: Sequence[Edge]) -> set[str]:
    return {e.source for e in cycle}


def _has_exit(g: WeightedGraph, cycle: Sequence[Edge]) -> bool:
    names = {e.name for e in cycle}
    return any(f.name not in names for v in _vertices_of(cycle) for f in g.out_edges(v))


def shared_vertex_cycles(g: WeightedGraph, cycles: Sequence[Sequence[Edge]]) -> tuple[int, int, str] | None:
    for a in range(len(cycles)):
        for b in range(a + 1, len(cycles)):
            common = _vertices_of(cycles[a]) & _vertices_of(cycles[b])
            if common:
                return a, b, min(common, key=g.vertex_position)
    return None


def unweighted_gk_inputs(g: WeightedGraph) -> UnweightedGkInputs:
    """Cycles and the two chain lengths for a graph with vertex-disjoint cycles."""
    cycles = graph_cycles(g)
    reach = [set(g.tree(c[0].source)) for c in cycles]

    def related(a: int, b: int) -> bool:
        return cycles[b][0].source in reach[a]

    chain_all = longest_chain(len(cycles), related)
    with_exit = [i for i, c in enumerate(cycles) if _has_exit(g, c)]
    chain_exit = longest_chain(len(cycles), related, with_exit)
    return UnweightedGkInputs(tuple(cycles), len(chain_all), len(chain_exit),
                              tuple(chain_all), tuple(chain_exit))


def unweighted_gk(g: WeightedGraph, aut: NodAutomaton | None = None) -> GkResult:
    """Growth from the cycle structure of an unweighted graph."""
    if not g.is_unweighted():
        raise GraphError("graph has edges of weight > 1")
    aut = aut or NodAutomaton(g)
    cycles = graph_cycles(g)
    clash = shared_vertex_cycles(g, cycles)
    if clash is not None:
        a, _, v = clash
        cyc = list(cycles[a])
        k = next(i for i, e in enumerate(cyc) if e.source == v)
        p = QuasiCycle(tuple(g.letter(e.name) for e in cyc[k:] + cyc[:k]))
        return GkResult(Growth.EXPONENTIAL, witness=p)
    if not cycles:
        return GkResult(Growth.POLYNOMIAL, 0)
    inputs = unweighted_gk_inputs(g)
    word = [QuasiCycle(tuple(g.letter(e.name) for e in c)) for c in cycles]
    if 2 * inputs.d2 >= 2 * inputs.d1 - 1:
        ps = [word[i] for i in inputs.chain_exit]
        chain = ps + [p.star() for p in reversed(ps)]
    else:
        ps = [word[i] for i in inputs.chain_all]
        chain = ps + [p.star() for p in reversed(ps[:-1])]
    for p, q in zip(chain, chain[1:]):
        if not implies(aut, p, q):
            raise AssertionError(f"cycle chain link {p} => {q} fails")
    return GkResult(Growth.POLYNOMIAL, len(chain), chain=tuple(chain))
