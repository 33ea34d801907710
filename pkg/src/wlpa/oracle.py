"""Independent brute-force checks for the quasi-cycle machinery.

Nothing here uses the letter digraph's successor tables or any shortcut
argument; every step is checked against the forbidden set directly.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence

from .graph import Letter, Word
from .nod import NodAutomaton, naive_is_nod_path
from .quasicycles import QuasiCycle


def step_ok(aut: NodAutomaton, x: Letter, y: Letter) -> bool:
    return x.range == y.source and (x, y) not in aut.forbidden


def default_bound(aut: NodAutomaton) -> int:
    return 2 * len(aut.letters)


def connectors(aut: NodAutomaton, p: Sequence[Letter], q: Sequence[Letter],
               bound: int) -> Iterator[Word]:
    """Every nonempty ``o`` of length at most ``bound`` with ``poq`` a nod-path
    and ``p`` not a prefix of ``o``, by plain depth-first enumeration."""
    p, q = tuple(p), tuple(q)

    def grow(o: list[Letter]) -> Iterator[Word]:
        tail = o[-1]
        if step_ok(aut, tail, q[0]) and tuple(o[:len(p)]) != p:
            yield tuple(o)
        if len(o) < bound:
            for y in aut.letters:
                if step_ok(aut, tail, y):
                    o.append(y)
                    yield from grow(o)
                    o.pop()

    for y in aut.letters:
        if step_ok(aut, p[-1], y):
            yield from grow([y])


_PREFIX_IS_P = "p"
_DIVERGED = "n"


def connector_exists(aut: NodAutomaton, p: Sequence[Letter], q: Sequence[Letter],
                     bound: int | None = None) -> bool:
    """Exhaustive search over all connectors up to ``bound``, layer by layer.

    Connectors of equal length are merged when they end in the same letter
    and agree on whether ``p`` is (or may still become) their prefix;
    nothing else about them affects the conditions being checked.
    """
    p, q = tuple(p), tuple(q)
    bound = default_bound(aut) if bound is None else bound
    n = len(p)

    def tag_after(tag, length: int, y: Letter):
        if tag in (_PREFIX_IS_P, _DIVERGED):
            return tag
        if y != p[length - 1]:
            return _DIVERGED
        return _PREFIX_IS_P if length == n else length

    layer = set()
    for y in aut.letters:
        if step_ok(aut, p[-1], y):
            layer.add((y, tag_after(0, 1, y)))
    length = 1
    while layer:
        for y, tag in layer:
            if tag != _PREFIX_IS_P and step_ok(aut, y, q[0]):
                return True
        if length == bound:
            return False
        length += 1
        layer = {(z, tag_after(tag, length, z))
                 for y, tag in layer for z in aut.letters if step_ok(aut, y, z)}
    return False


def brute_implies(aut: NodAutomaton, p: QuasiCycle, q: QuasiCycle, bound: int | None = None) -> bool:
    if naive_is_nod_path(aut.graph, aut.forbidden, p.word + q.word):
        return True
    return connector_exists(aut, p.word, q.word, bound)


def brute_selfconnected(aut: NodAutomaton, p: QuasiCycle, bound: int | None = None) -> bool:
    return connector_exists(aut, p.word, p.word, bound)


def _naive_nod2(aut: NodAutomaton, word: Sequence[Letter]) -> bool:
    word = tuple(word)
    return naive_is_nod_path(aut.graph, aut.forbidden, word + word)


def literal_quasicycles(aut: NodAutomaton) -> set[Word]:
    """List closed d-paths with distinct letters at every vertex, keep those
    whose square is a nod-path, then drop those whose square contains a
    shorter word with a nod-path square."""
    g = aut.graph
    closed: list[Word] = []

    def walk(start: str, path: list[Letter]) -> None:
        end = path[-1].range
        if end == start:
            closed.append(tuple(path))
        for y in aut.letters:
            if y.source == end and y not in path:
                path.append(y)
                walk(start, path)
                path.pop()

    for v in g.vertices:
        for x in aut.letters:
            if x.source == v:
                walk(v, [x])
    survivors = set()
    for p in closed:
        if not _naive_nod2(aut, p):
            continue
        n = len(p)
        square = p + p
        if any(_naive_nod2(aut, square[i:i + k]) for k in range(1, n) for i in range(2 * n - k + 1)):
            continue
        survivors.add(p)
    return survivors
