"""Finite-dimensional case: rewriting a weighted graph into an unweighted one.

The rewriting runs three graph transformations until no weighted edge is
left: reversing the edges that leave the trees below weighted edges,
replacing the tree of a weighted vertex by an unweighted graph, and
splicing that replacement back into the ambient graph. The unweighted
acyclic result is then read off as a product of matrix rings, one per sink.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from graphlib import CycleError, TopologicalSorter

from .graph import Edge, GraphError, WeightedGraph
from .nod import NodAutomaton


class NotFiniteDimensional(GraphError):
    """The graph has a quasi-cycle, so its algebra is infinite-dimensional."""


class InvariantError(AssertionError):
    """A structural guarantee failed; this points at a bug, not at the input."""


class EdgeType(str, enum.Enum):
    A = "A"  # sole out-edge of its source
    B = "B"


def _letter_digraph_acyclic(aut: NodAutomaton) -> bool:
    try:
        TopologicalSorter({i: s for i, s in enumerate(aut.succ)}).prepare()
    except CycleError:
        return False
    return True


def is_aquasicyclic(g: WeightedGraph, base: Mapping[str, str] | None = None) -> bool:
    """True iff ``g`` has no quasi-cycle.

    The shortest cycle of the letter digraph is chordless, hence a
    quasi-cycle, so it suffices that the letter digraph is acyclic.
    """
    return _letter_digraph_acyclic(NodAutomaton(g, base))


def require_aquasicyclic(g: WeightedGraph) -> None:
    if not is_aquasicyclic(g):
        raise NotFiniteDimensional("graph has a quasi-cycle; the algebra is infinite-dimensional")


# -- structure of aquasicyclic graphs ------------------------------------------

@dataclass
class AuditReport:
    acyclic: bool = True
    one_weighted_edge_per_vertex: bool = True
    rwf_vertices_emit_at_most_one_edge: bool = True
    separated_weight_trees: bool = True
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def in_line(g: WeightedGraph, e: Edge, f: Edge) -> bool:
    return e == f or f.source in g.tree(e.range) or e.source in g.tree(f.range)


def structural_audit(g: WeightedGraph, strict: bool = True) -> AuditReport:
    """Check the shape every finite aquasicyclic graph must have.

    With ``strict`` a failed check raises :class:`InvariantError`.
    """
    require_aquasicyclic(g)
    report = AuditReport()
    if not g.is_acyclic():
        report.acyclic = False
        report.violations.append("graph has a cycle")
    for v in g.vertices:
        heavy = [e.name for e in g.out_edges(v) if e.weighted]
        if len(heavy) > 1:
            report.one_weighted_edge_per_vertex = False
            report.violations.append(f"{v} emits weighted edges {heavy}")
    for v in g.rwf():
        if len(g.out_edges(v)) > 1:
            report.rwf_vertices_emit_at_most_one_edge = False
            report.violations.append(f"{v} lies in the range weight forest and emits {len(g.out_edges(v))} edges")
    heavy = g.weighted_edges()
    for i, e in enumerate(heavy):
        for f in heavy[i + 1:]:
            if not in_line(g, e, f) and set(g.tree(e.range)) & set(g.tree(f.range)):
                report.separated_weight_trees = False
                report.violations.append(f"trees below {e.name} and {f.name} meet")
    if strict and not report.ok:
        raise InvariantError("; ".join(report.violations))
    return report


def classify_edge(g: WeightedGraph, name: str) -> EdgeType:
    e = g.edge(name)
    if not e.weighted:
        raise GraphError(f"edge '{name}' is not weighted")
    return EdgeType.A if len(g.out_edges(e.source)) == 1 else EdgeType.B


# -- naming ----------------------------------------------------------------------

def _fresh(base: str, taken: set[str]) -> str:
    name = base
    while name in taken:
        name += "_"
    taken.add(name)
    return name


# -- step 1: reverse the edges below weighted edges ----------------------------

def normalization_zone(g: WeightedGraph) -> list[str]:
    """Range weight forest plus every vertex whose only out-edge is weighted."""
    single = [v for v in g.vertices if len(g.out_edges(v)) == 1 and g.out_edges(v)[0].weighted]
    return [v for v in g.vertices if v in set(g.rwf()) | set(single)]


def weighted_edge_count(g: WeightedGraph) -> int:
    return len(g.weighted_edges())


def normalize_weighted_edges(g: WeightedGraph) -> WeightedGraph:
    """Reverse every edge leaving the zone, splitting weight ``w`` into ``w`` plain edges.

    Afterwards each weighted edge shares its source with another edge and
    ends in a sink.
    """
    require_aquasicyclic(g)
    zone = set(normalization_zone(g))
    taken = {e.name for e in g.edges if e.source not in zone}
    edges = []
    for e in g.edges:
        if e.source not in zone:
            edges.append(e)
        elif e.weight == 1:
            edges.append(Edge(_fresh(e.name, taken), e.range, e.source))
        else:
            edges += [Edge(_fresh(f"{e.name}_{i}", taken), e.range, e.source)
                      for i in range(1, e.weight + 1)]
    out = WeightedGraph(g.vertices, edges)
    if weighted_edge_count(out) > weighted_edge_count(g):
        raise InvariantError("normalization added weighted edges")
    for e in out.weighted_edges():
        if classify_edge(out, e.name) is not EdgeType.B or out.out_edges(e.range):
            raise InvariantError(f"weighted edge {e.name} is not type B with a sink range")
    if not is_aquasicyclic(out):
        raise InvariantError("normalization created a quasi-cycle")
    return out


# -- step 2: unweight the tree of one weighted vertex ------------------------

def pick_pivot(g: WeightedGraph) -> str:
    """Least vertex emitting a weighted edge with no other such emitter below it."""
    emitters = [v for v in g.vertices if any(e.weighted for e in g.out_edges(v))]
    for v in emitters:
        if not any(w in emitters for w in g.tree(v) if w != v):
            return v
    raise InvariantError("no weighted emitter has a weight-free tree")


@dataclass(frozen=True)
class Replacement:
    graph: WeightedGraph
    images: dict[str, tuple[str, ...]]


def unweight_tree(g: WeightedGraph, v: str) -> Replacement:
    """Unweighted graph equivalent to the subgraph on the tree of ``v``.

    ``v`` must emit one edge ``e`` of weight ``k >= 2`` into a sink ``u`` and
    ``n_i`` plain edges into each of ``x_1 < ... < x_m``. The result has a
    chain ``v -> u_1 -> ... -> u_k``, for each ``i`` a chain of ``n_i`` edges
    from ``v`` to ``x_i`` and a chain of ``(k-1) n_i`` edges after ``x_i``;
    the old out-edges of ``x_i`` leave from the end of that last chain.
    """
    sub = g.hereditary_subgraph(g.tree(v))
    heavy = [e for e in sub.out_edges(v) if e.weighted]
    if len(heavy) != 1:
        raise InvariantError(f"{v} must emit exactly one weighted edge")
    e = heavy[0]
    k, u = e.weight, e.range
    if u == v or sub.out_edges(u):
        raise InvariantError(f"weighted edge {e.name} must end in a sink other than {v}")
    plain = [f for f in sub.out_edges(v) if f is not e]
    if not plain:
        raise InvariantError(f"weighted edge {e.name} is the only edge at {v}")
    targets = sorted({f.range for f in plain}, key=g.vertex_position)
    groups = [[f for f in plain if f.range == x] for x in targets]
    below = sub.tree(targets)
    if u in below or v in below:
        raise InvariantError(f"{u} or {v} is reachable from the targets of {v}")

    vnames = set(g.vertices)
    enames = set(x.name for x in g.edges)
    us = [_fresh(f"{u}_{i}", vnames) for i in range(1, k + 1)]
    u_tail = [[_fresh(f"{u}_{i}_{j}", vnames) for j in range(1, (k - 1) * len(grp) + 1)]
              for i, grp in enumerate(groups, start=1)]
    v_mid = [[_fresh(f"{v}_{i}_{j}", vnames) for j in range(2, len(grp) + 1)]
             for i, grp in enumerate(groups, start=1)]
    vertices = us + [w for row in u_tail for w in row] + [v]
    vertices += [w for row in v_mid for w in row] + targets
    vertices += [y for y in below if y not in targets]

    edges = []
    chain = [v] + us
    for i in range(k):
        edges.append(Edge(_fresh(f"{e.name}_a{i + 1}", enames), chain[i], chain[i + 1]))
    for i, x in enumerate(targets):
        chain = [v] + v_mid[i] + [x]
        for j in range(len(chain) - 1):
            edges.append(Edge(_fresh(f"{e.name}_b{i + 1}_{j + 1}", enames), chain[j], chain[j + 1]))
    for i, x in enumerate(targets):
        chain = [x] + u_tail[i]
        for j in range(len(chain) - 1):
            edges.append(Edge(_fresh(f"{e.name}_c{i + 1}_{j + 1}", enames), chain[j], chain[j + 1]))
    last = {x: u_tail[i][-1] for i, x in enumerate(targets)}
    for h in sub.edges:
        if h.source in last:
            edges.append(Edge(h.name, last[h.source], h.range, h.weight))
        elif h.source in below:
            edges.append(h)

    images = {u: tuple(us) + tuple(w for row in u_tail for w in row),
              v: (v,) + tuple(w for row in v_mid for w in row)}
    images.update({y: (y,) for y in below})
    out = WeightedGraph(vertices, edges)
    if set(images) != set(sub.vertices):
        raise InvariantError("images do not cover the tree")
    if sorted(w for ws in images.values() for w in ws) != sorted(out.vertices):
        raise InvariantError("images do not partition the replacement vertices")
    return Replacement(out, images)


# -- step 3: splice the replacement into the ambient graph -------------------

def splice(g: WeightedGraph, hereditary: Iterable[str], replacement: WeightedGraph,
           images: Mapping[str, Sequence[str]]) -> WeightedGraph:
    """Replace the subgraph on ``hereditary`` by ``replacement``.

    Edges from outside into the set are copied once per image vertex of
    their range; edges inside the set are dropped in favour of those of
    ``replacement``.
    """
    h = set(hereditary)
    if not g.is_hereditary(h):
        raise GraphError("vertex set is not hereditary")
    if set(images) != h:
        raise GraphError("images must be given for exactly the replaced vertices")
    seen: set[str] = set()
    for v, ws in images.items():
        if not ws:
            raise GraphError(f"empty image for '{v}'")
        for w in ws:
            if not replacement.has_vertex(w):
                raise GraphError(f"image vertex '{w}' missing from the replacement")
            if w in seen:
                raise GraphError(f"image vertex '{w}' used twice")
            seen.add(w)
    outside = [v for v in g.vertices if v not in h]
    clash = set(outside) & set(replacement.vertices)
    if clash:
        raise GraphError(f"replacement reuses vertex names {sorted(clash)}")

    taken = {e.name for e in replacement.edges}
    taken |= {e.name for e in g.edges if e.source not in h and e.range not in h}
    edges = []
    for e in g.edges:
        if e.source in h:
            continue
        if e.range not in h:
            edges.append(e)
            continue
        targets = images[e.range]
        if len(targets) == 1:
            edges.append(Edge(_fresh(e.name, taken), e.source, targets[0], e.weight))
        else:
            edges += [Edge(_fresh(f"{e.name}_{j}", taken), e.source, t, e.weight)
                      for j, t in enumerate(targets, start=1)]
    return WeightedGraph(outside + list(replacement.vertices), edges + list(replacement.edges))


# -- driver ----------------------------------------------------------------------

@dataclass(frozen=True)
class PipelineStep:
    action: str
    graph: WeightedGraph
    pivot: str | None = None
    replacement: Replacement | None = None


def unweighting_steps(g: WeightedGraph) -> list[PipelineStep]:
    """Every intermediate graph on the way to an unweighted graph."""
    require_aquasicyclic(g)
    steps = [PipelineStep("input", g)]
    budget = weighted_edge_count(g)
    for _ in range(budget + 1):
        g = normalize_weighted_edges(steps[-1].graph)
        steps.append(PipelineStep("normalize", g))
        if g.is_unweighted():
            break
        before = weighted_edge_count(g)
        v = pick_pivot(g)
        tree = g.tree(v)
        rep = unweight_tree(g, v)
        g = splice(g, tree, rep.graph, rep.images)
        if weighted_edge_count(g) >= before:
            raise InvariantError("splicing did not remove a weighted edge")
        if not is_aquasicyclic(g):
            raise InvariantError("splicing created a quasi-cycle")
        steps.append(PipelineStep("splice", g, v, rep))
    else:
        raise InvariantError("weighted edges remain after the round budget")
    final = steps[-1].graph
    if not (final.is_unweighted() and final.is_acyclic()):
        raise InvariantError("pipeline output is not an unweighted acyclic graph")
    return steps


def unweight_fully(g: WeightedGraph) -> WeightedGraph:
    return unweighting_steps(g)[-1].graph


# -- matrix sizes ------------------------------------------------------------

@dataclass(frozen=True)
class Decomposition:
    sizes: tuple[int, ...]

    @property
    def dimension(self) -> int:
        return sum(n * n for n in self.sizes)

    def __str__(self) -> str:
        return " x ".join(f"M_{n}(K)" for n in self.sizes)


def paths_into(g: WeightedGraph) -> dict[str, int]:
    """Number of paths (the trivial one included) ending at each vertex."""
    preds = {v: [e.source for e in g.in_edges(v)] for v in g.vertices}
    try:
        order = list(TopologicalSorter(preds).static_order())
    except CycleError:
        raise GraphError("graph has a cycle") from None
    count: dict[str, int] = {}
    for v in order:
        count[v] = 1 + sum(count[e.source] for e in g.in_edges(v))
    return count


def acyclic_decomposition(g: WeightedGraph) -> Decomposition:
    """One matrix block per sink, of size the number of paths into that sink."""
    if not g.is_unweighted():
        raise GraphError("graph has edges of weight > 1")
    count = paths_into(g)
    return Decomposition(tuple(sorted(count[v] for v in g.sinks())))


def dimension_oracle(g: WeightedGraph, base: Mapping[str, str] | None = None) -> int:
    """Total number of nod-paths, counted up to the number of letters.

    Without quasi-cycles no nod-path repeats a letter, so a nonzero count
    just past that length means the graph is not finite-dimensional.
    """
    aut = NodAutomaton(g, base)
    cap = len(aut.letters)
    counts = aut.count_by_length(cap + 1)
    if counts[-1]:
        raise NotFiniteDimensional(f"nod-paths longer than {cap} letters exist")
    return sum(counts)


def decompose(g: WeightedGraph) -> tuple[Decomposition, int]:
    """Matrix sizes of a finite-dimensional algebra, checked against the nod-path count."""
    dec = acyclic_decomposition(unweight_fully(g))
    oracle = dimension_oracle(g)
    if dec.dimension != oracle:
        raise InvariantError(f"decomposition dimension {dec.dimension} != nod-path count {oracle}")
    return dec, oracle
