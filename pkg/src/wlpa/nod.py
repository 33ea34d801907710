"""Forbidden pairs, the nod-path predicate, enumeration and exact counting.

All forbidden words have length two, so the nod-paths of a weighted graph
are precisely the walks in a digraph on its letters (the "letter digraph"):
``x -> y`` is an arc iff ``x`` ends where ``y`` starts and ``xy`` is not
forbidden.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator, Mapping, Sequence

from .graph import GraphError, Letter, WeightedGraph, Word

BaseChoice = dict[str, str]


def choose_base(g: WeightedGraph) -> BaseChoice:
    """Pick, for every regular vertex, a maximal-weight out-edge.

    Ties go to the edge declared first.
    """
    choice = {}
    for v in g.regular_vertices():
        best = g.out_edges(v)[0]
        for e in g.out_edges(v)[1:]:
            if e.weight > best.weight:
                best = e
        choice[v] = best.name
    return choice


def all_bases(g: WeightedGraph) -> Iterator[BaseChoice]:
    """Every valid base choice, in lexicographic order of edge positions."""
    regular = g.regular_vertices()
    options = []
    for v in regular:
        w = g.vertex_weight(v)
        options.append([e.name for e in g.out_edges(v) if e.weight == w])
    for combo in itertools.product(*options):
        yield dict(zip(regular, combo))


def check_base(g: WeightedGraph, choice: Mapping[str, str]) -> BaseChoice:
    """Fill in missing vertices with the default rule and validate the rest."""
    full = choose_base(g)
    for v, name in choice.items():
        if not g.has_vertex(v):
            raise GraphError(f"base override names unknown vertex '{v}'")
        if not g.out_edges(v):
            raise GraphError(f"base override for sink '{v}'")
        if not g.has_edge(name) or g.edge(name).source != v:
            raise GraphError(f"edge '{name}' does not start at '{v}'")
        if g.edge(name).weight != g.vertex_weight(v):
            raise GraphError(f"edge '{name}' does not have maximal weight at '{v}'")
        full[v] = name
    return full


def forbidden_pairs(g: WeightedGraph, choice: Mapping[str, str] | None = None) -> set[tuple[Letter, Letter]]:
    choice = choose_base(g) if choice is None else check_base(g, choice)
    pairs = set()
    for v in g.regular_vertices():
        base = choice[v]
        w = g.vertex_weight(v)
        for i in range(1, w + 1):
            for j in range(1, w + 1):
                pairs.add((g.letter(base, i), g.letter(base, j, ghost=True)))
        for e in g.out_edges(v):
            for f in g.out_edges(v):
                pairs.add((g.letter(e.name, 1, ghost=True), g.letter(f.name, 1)))
    return pairs


class NodAutomaton:
    """The letter digraph of a weighted graph for a fixed base choice.

    Letters are identified internally by their position in ``letters``;
    ``succ[i]`` lists the positions allowed after letter ``i``.
    """

    def __init__(self, graph: WeightedGraph, base: Mapping[str, str] | None = None):
        self.graph = graph
        self.base = choose_base(graph) if base is None else check_base(graph, base)
        self.letters: tuple[Letter, ...] = tuple(graph.letters())
        self.pos = {x: i for i, x in enumerate(self.letters)}
        self.forbidden = frozenset(forbidden_pairs(graph, self.base))
        by_source: dict[str, list[int]] = {v: [] for v in graph.vertices}
        for i, x in enumerate(self.letters):
            by_source[x.source].append(i)
        self.succ: tuple[tuple[int, ...], ...] = tuple(
            tuple(j for j in by_source[x.range] if (x, self.letters[j]) not in self.forbidden)
            for x in self.letters
        )
        self.succ_sets = tuple(frozenset(s) for s in self.succ)
        self._reach: dict[int, frozenset[int]] = {}

    @property
    def vertex_count(self) -> int:
        return len(self.graph.vertices)

    def allowed(self, x: Letter, y: Letter) -> bool:
        return self.pos[y] in self.succ_sets[self.pos[x]]

    def nod_successors(self, x: Letter) -> list[Letter]:
        return [self.letters[j] for j in self.succ[self.pos[x]]]

    def is_nod_path(self, word: Sequence[Letter] | str) -> bool:
        if isinstance(word, str):
            return self.graph.has_vertex(word)
        if not word:
            return False
        return all(self.allowed(x, y) for x, y in zip(word, word[1:]))

    def reachable(self, i: int) -> frozenset[int]:
        """Letter ids reachable from letter ``i`` by a walk of length >= 1."""
        if i not in self._reach:
            seen: set[int] = set()
            stack = list(self.succ[i])
            while stack:
                j = stack.pop()
                if j not in seen:
                    seen.add(j)
                    stack.extend(self.succ[j])
            self._reach[i] = frozenset(seen)
        return self._reach[i]

    def ids(self, word: Sequence[Letter]) -> tuple[int, ...]:
        return tuple(self.pos[x] for x in word)

    def word(self, ids: Sequence[int]) -> Word:
        return tuple(self.letters[i] for i in ids)

    def enumerate_nod_paths(self, max_len: int) -> list[list]:
        """All nod-paths grouped by length; level 0 holds the vertex names."""
        if max_len < 0:
            raise ValueError("max_len must be non-negative")
        levels: list[list] = [list(self.graph.vertices)]
        frontier = [(i,) for i in range(len(self.letters))]
        for k in range(1, max_len + 1):
            if k > 1:
                frontier = [w + (j,) for w in frontier for j in self.succ[w[-1]]]
            levels.append([self.word(w) for w in frontier])
        return levels

    def count_by_length(self, n: int) -> list[int]:
        """Exact counts ``c_0..c_n`` of nod-paths of each length."""
        if n < 0:
            raise ValueError("n must be non-negative")
        counts = [self.vertex_count]
        ending = [1] * len(self.letters)
        for _ in range(n):
            counts.append(sum(ending))
            nxt = [0] * len(self.letters)
            for i, c in enumerate(ending):
                if c:
                    for j in self.succ[i]:
                        nxt[j] += c
            ending = nxt
        return counts

    def growth(self, n: int) -> list[int]:
        """Cumulative counts ``d_V(0..n)``: nod-paths of length at most k."""
        return list(itertools.accumulate(self.count_by_length(n)))


def naive_is_nod_path(g: WeightedGraph, forbidden: set | frozenset, word: Sequence[Letter]) -> bool:
    """Literal check: d-path and no subword equals a forbidden word."""
    if not word:
        return False
    if any(x.range != y.source for x, y in zip(word, word[1:])):
        return False
    forbidden_words = {tuple(p) for p in forbidden}
    lengths = {len(p) for p in forbidden_words}
    for i in range(len(word)):
        for k in lengths:
            if tuple(word[i:i + k]) in forbidden_words and i + k <= len(word):
                return False
    return True
