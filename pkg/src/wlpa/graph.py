"""Finite weighted graphs and the letters of their double graph."""

from __future__ import annotations

import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class GraphError(ValueError):
    """Raised for malformed graph input."""


@dataclass(frozen=True)
class Edge:
    name: str
    source: str
    range: str
    weight: int = 1

    @property
    def weighted(self) -> bool:
        return self.weight > 1


@dataclass(frozen=True, order=True)
class Letter:
    """A real letter ``e.i`` or a ghost letter ``e.i*`` of the double graph.

    Ordering is by edge declaration position, then index, real before ghost.
    Letters are only meaningful relative to the graph that produced them.
    """

    position: int
    index: int
    ghost: bool
    edge: str = field(compare=False)
    source: str = field(compare=False)
    range: str = field(compare=False)

    def star(self) -> Letter:
        return Letter(self.position, self.index, not self.ghost, self.edge,
                      self.range, self.source)

    def __str__(self) -> str:
        return f"{self.edge}.{self.index}{'*' if self.ghost else ''}"

    def __repr__(self) -> str:
        return f"Letter({self})"


Word = tuple[Letter, ...]


def render_word(word: Sequence[Letter] | str) -> str:
    if isinstance(word, str):
        return word
    return " ".join(map(str, word))


class WeightedGraph:
    """Immutable finite weighted graph.

    Vertices and edges keep declaration order; every set-valued query
    returns vertex names in that order.
    """

    __slots__ = ("vertices", "edges", "_vpos", "_epos", "_out", "_in")

    def __init__(self, vertices: Iterable[str], edges: Iterable[Edge | tuple] = ()):
        vertices = tuple(vertices)
        edges = tuple(e if isinstance(e, Edge) else Edge(*e) for e in edges)
        if not vertices:
            raise GraphError("empty vertex set")
        vpos: dict[str, int] = {}
        for v in vertices:
            if not isinstance(v, str) or not IDENT.match(v):
                raise GraphError(f"invalid vertex name {v!r}")
            if v in vpos:
                raise GraphError(f"duplicate vertex '{v}'")
            vpos[v] = len(vpos)
        epos: dict[str, int] = {}
        out: dict[str, list[Edge]] = {v: [] for v in vertices}
        inc: dict[str, list[Edge]] = {v: [] for v in vertices}
        for e in edges:
            if not isinstance(e.name, str) or not IDENT.match(e.name):
                raise GraphError(f"invalid edge name {e.name!r}")
            if e.name in epos:
                raise GraphError(f"duplicate edge '{e.name}'")
            for end in (e.source, e.range):
                if end not in vpos:
                    raise GraphError(f"unknown vertex '{end}' in edge '{e.name}'")
            if not isinstance(e.weight, int) or isinstance(e.weight, bool) or e.weight < 1:
                raise GraphError(f"edge '{e.name}' has weight {e.weight!r}; weights must be >= 1")
            epos[e.name] = len(epos)
            out[e.source].append(e)
            inc[e.range].append(e)
        self.vertices = vertices
        self.edges = edges
        self._vpos = vpos
        self._epos = epos
        self._out = {v: tuple(es) for v, es in out.items()}
        self._in = {v: tuple(es) for v, es in inc.items()}

    # -- basic access -------------------------------------------------------

    def __repr__(self) -> str:
        return f"WeightedGraph({len(self.vertices)} vertices, {len(self.edges)} edges)"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.vertices, self.edges))

    def edge(self, name: str) -> Edge:
        return self.edges[self._epos[name]]

    def edge_position(self, name: str) -> int:
        return self._epos[name]

    def vertex_position(self, v: str) -> int:
        return self._vpos[v]

    def has_vertex(self, v: str) -> bool:
        return v in self._vpos

    def has_edge(self, name: str) -> bool:
        return name in self._epos

    def out_edges(self, v: str) -> tuple[Edge, ...]:
        return self._out[v]

    def in_edges(self, v: str) -> tuple[Edge, ...]:
        return self._in[v]

    def _ordered(self, vs: Iterable[str]) -> list[str]:
        return sorted(set(vs), key=self._vpos.__getitem__)

    # -- structure ----------------------------------------------------------

    def sinks(self) -> list[str]:
        return [v for v in self.vertices if not self._out[v]]

    def regular_vertices(self) -> list[str]:
        return [v for v in self.vertices if self._out[v]]

    def vertex_weight(self, v: str) -> int:
        if not self._out[v]:
            raise GraphError(f"vertex '{v}' is a sink")
        return max(e.weight for e in self._out[v])

    def weighted_edges(self) -> list[Edge]:
        return [e for e in self.edges if e.weighted]

    def is_unweighted(self) -> bool:
        return all(e.weight == 1 for e in self.edges)

    def letters(self) -> list[Letter]:
        out = []
        for pos, e in enumerate(self.edges):
            for i in range(1, e.weight + 1):
                out.append(Letter(pos, i, False, e.name, e.source, e.range))
                out.append(Letter(pos, i, True, e.name, e.range, e.source))
        return out

    def letter(self, edge: str, index: int = 1, ghost: bool = False) -> Letter:
        e = self.edge(edge)
        if not 1 <= index <= e.weight:
            raise GraphError(f"edge '{edge}' has no letter of index {index}")
        real = Letter(self._epos[edge], index, False, e.name, e.source, e.range)
        return real.star() if ghost else real

    def parse_letter(self, text: str) -> Letter:
        m = re.fullmatch(r"([A-Za-z_][A-Za-z0-9_]*)\.([0-9]+)(\*?)", text.strip())
        if not m or not self.has_edge(m.group(1)):
            raise GraphError(f"cannot read letter {text!r}")
        return self.letter(m.group(1), int(m.group(2)), bool(m.group(3)))

    def word(self, text: str) -> Word:
        """Parse a space separated word such as ``"e.2 f.1 g.1* e.2*"``."""
        return tuple(self.parse_letter(t) for t in text.split())

    def tree(self, roots: str | Iterable[str]) -> list[str]:
        if isinstance(roots, str):
            roots = [roots]
        seen = set()
        stack = list(roots)
        while stack:
            v = stack.pop()
            if v in seen:
                continue
            seen.add(v)
            stack.extend(e.range for e in self._out[v])
        return self._ordered(seen)

    def is_hereditary(self, vertices: Iterable[str]) -> bool:
        h = set(vertices)
        return all(e.range in h for v in h for e in self._out[v])

    def hereditary_subgraph(self, vertices: Iterable[str]) -> WeightedGraph:
        h = set(vertices)
        if not self.is_hereditary(h):
            raise GraphError("vertex set is not hereditary")
        return WeightedGraph(
            [v for v in self.vertices if v in h],
            [e for e in self.edges if e.source in h],
        )

    def rwf(self) -> list[str]:
        """Tree of the ranges of all weighted edges."""
        return self.tree(e.range for e in self.weighted_edges())

    def is_acyclic(self) -> bool:
        # Kahn's algorithm on the underlying multigraph.
        indeg = {v: len(self._in[v]) for v in self.vertices}
        ready = [v for v, d in indeg.items() if d == 0]
        done = 0
        while ready:
            v = ready.pop()
            done += 1
            for e in self._out[v]:
                indeg[e.range] -= 1
                if indeg[e.range] == 0:
                    ready.append(e.range)
        return done == len(self.vertices)
