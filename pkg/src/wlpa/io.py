"""Line-oriented text format for weighted graphs.

::

    # comment
    vertex u
    vertex v
    edge e : v -> u weight 2
    edge f : v -> u
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .graph import Edge, GraphError, WeightedGraph

_NAME = r"[A-Za-z_][A-Za-z0-9_]*"
_VERTEX = re.compile(rf"vertex\s+({_NAME})")
_EDGE = re.compile(rf"edge\s+({_NAME})\s*:\s*({_NAME})\s*->\s*({_NAME})(?:\s+weight\s+(-?[0-9]+))?")


class ParseError(GraphError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(message if line is None else f"{message} (line {line})")


@dataclass(frozen=True)
class VertexDecl:
    name: str
    line: int = 0


@dataclass(frozen=True)
class EdgeDecl:
    name: str
    source: str
    range: str
    weight: int = 1
    line: int = 0


@dataclass(frozen=True)
class GraphDocument:
    declarations: tuple[VertexDecl | EdgeDecl, ...]

    def to_graph(self) -> WeightedGraph:
        vertices: dict[str, int] = {}
        edges: dict[str, EdgeDecl] = {}
        for d in self.declarations:
            if isinstance(d, VertexDecl):
                if d.name in vertices:
                    raise ParseError(f"duplicate vertex '{d.name}'", d.line)
                vertices[d.name] = d.line
                continue
            if d.name in edges:
                raise ParseError(f"duplicate edge '{d.name}'", d.line)
            for end in (d.source, d.range):
                if end not in vertices:
                    raise ParseError(f"unknown vertex '{end}'", d.line)
            if d.weight < 1:
                raise ParseError(f"edge '{d.name}' has weight {d.weight}; weights must be >= 1", d.line)
            edges[d.name] = d
        if not vertices:
            raise ParseError("empty vertex set")
        return WeightedGraph(vertices, [Edge(d.name, d.source, d.range, d.weight) for d in edges.values()])

    def render(self) -> str:
        return "".join(render_decl(d) + "\n" for d in self.declarations)

    def __eq__(self, other: object) -> bool:
        # Source positions are diagnostics only.
        if not isinstance(other, GraphDocument):
            return NotImplemented
        return _strip(self) == _strip(other)

    def __hash__(self) -> int:
        return hash(_strip(self))


def _strip(doc: GraphDocument) -> tuple:
    return tuple((type(d).__name__,) + tuple(v for k, v in vars(d).items() if k != "line")
                 for d in doc.declarations)


def render_decl(d: VertexDecl | EdgeDecl) -> str:
    if isinstance(d, VertexDecl):
        return f"vertex {d.name}"
    text = f"edge {d.name} : {d.source} -> {d.range}"
    return text if d.weight == 1 else f"{text} weight {d.weight}"


def parse_document(text: str) -> GraphDocument:
    decls: list[VertexDecl | EdgeDecl] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if m := _VERTEX.fullmatch(line):
            decls.append(VertexDecl(m.group(1), lineno))
        elif m := _EDGE.fullmatch(line):
            weight = int(m.group(4)) if m.group(4) is not None else 1
            decls.append(EdgeDecl(m.group(1), m.group(2), m.group(3), weight, lineno))
        else:
            raise ParseError(f"syntax error: {line!r}", lineno)
    return GraphDocument(tuple(decls))


def parse_graph(text: str) -> WeightedGraph:
    return parse_document(text).to_graph()


def document_of(g: WeightedGraph) -> GraphDocument:
    decls: list[VertexDecl | EdgeDecl] = [VertexDecl(v) for v in g.vertices]
    decls += [EdgeDecl(e.name, e.source, e.range, e.weight) for e in g.edges]
    return GraphDocument(tuple(decls))


def render_graph(g: WeightedGraph) -> str:
    return document_of(g).render()


def read_graph(path: str | Path) -> WeightedGraph:
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def fixture_names() -> list[str]:
    root = resources.files("wlpa") / "fixtures"
    return sorted(p.name[:-3] for p in root.iterdir() if p.name.endswith(".wg"))


def fixture_text(name: str) -> str:
    return (resources.files("wlpa") / "fixtures" / f"{name}.wg").read_text(encoding="utf-8")


def load_fixture(name: str) -> WeightedGraph:
    return parse_graph(fixture_text(name))
