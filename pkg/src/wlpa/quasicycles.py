"""Quasi-cycles: enumeration, rotation classes, star, and the connection relation."""

from __future__ import annotations

from collections import deque
from collections.abc import Sequence
from dataclasses import dataclass

from .graph import Letter, Word, render_word
from .nod import NodAutomaton


@dataclass(frozen=True)
class QuasiCycle:
    word: Word

    def __post_init__(self):
        if not self.word:
            raise ValueError("quasi-cycles are nonempty")

    def __len__(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return render_word(self.word)

    @property
    def first(self) -> Letter:
        return self.word[0]

    @property
    def last(self) -> Letter:
        return self.word[-1]

    def rotations(self) -> list[QuasiCycle]:
        w = self.word
        return [QuasiCycle(w[i:] + w[:i]) for i in range(len(w))]

    def canonical(self) -> QuasiCycle:
        return min(self.rotations(), key=lambda q: q.word)

    def star(self) -> QuasiCycle:
        return QuasiCycle(tuple(x.star() for x in reversed(self.word)))


@dataclass(frozen=True)
class QcClass:
    canonical: QuasiCycle
    members: tuple[QuasiCycle, ...]

    @classmethod
    def of(cls, p: QuasiCycle) -> QcClass:
        return cls(p.canonical(), tuple(sorted(p.rotations(), key=lambda q: q.word)))

    def __contains__(self, p: QuasiCycle) -> bool:
        return p in self.members

    def __str__(self) -> str:
        return f"[{self.canonical}]"


def rotations(p: QuasiCycle) -> QcClass:
    return QcClass.of(p)


def star(p: QuasiCycle) -> QuasiCycle:
    return p.star()


def is_nod2(aut: NodAutomaton, word: Sequence[Letter]) -> bool:
    return bool(word) and aut.is_nod_path(word) and aut.allowed(word[-1], word[0])


def is_quasicycle(aut: NodAutomaton, word: Sequence[Letter] | QuasiCycle) -> bool:
    """Nod²-path none of whose shorter subwords of its square is a nod²-path."""
    if isinstance(word, QuasiCycle):
        word = word.word
    word = tuple(word)
    if not is_nod2(aut, word):
        return False
    n = len(word)
    square = word + word
    for length in range(1, n):
        for i in range(len(square) - length + 1):
            if is_nod2(aut, square[i:i + length]):
                return False
    return True


def induced_cycles(aut: NodAutomaton) -> list[tuple[int, ...]]:
    """Chordless cycles of the letter digraph, each rooted at its least letter.

    A path is only extended while its letters carry no arcs other than the
    consecutive ones, so every emitted cycle has no chord.
    """
    succ = aut.succ_sets
    found = []

    def extend(path: list[int], root: int) -> None:
        last = path[-1]
        for y in aut.succ[last]:
            if y <= root or y in path or y in succ[y]:
                continue
            if any(y in succ[x] for x in path[:-1]):
                continue
            if any(x in succ[y] for x in path[1:]):
                continue
            path.append(y)
            if root in succ[y]:
                found.append(tuple(path))
            else:
                extend(path, root)
            path.pop()

    for root in range(len(aut.letters)):
        if root in succ[root]:
            found.append((root,))
        else:
            extend([root], root)
    return found


def enumerate_quasicycles(aut: NodAutomaton) -> list[QuasiCycle]:
    """Every quasi-cycle word (all rotations), in letter order."""
    words = []
    for ids in induced_cycles(aut):
        p = QuasiCycle(aut.word(ids))
        if not is_quasicycle(aut, p.word):
            raise AssertionError(f"chordless cycle {p} fails the quasi-cycle test")
        words.extend(p.rotations())
    return sorted(words, key=lambda q: q.word)


def quasicycle_classes(aut: NodAutomaton) -> list[QcClass]:
    """One class per chordless cycle, sorted by canonical representative."""
    classes = {QcClass.of(QuasiCycle(aut.word(ids))) for ids in induced_cycles(aut)}
    return sorted(classes, key=lambda c: c.canonical.word)


def implies(aut: NodAutomaton, p: QuasiCycle, q: QuasiCycle) -> bool:
    """Whether ``pq`` or some ``poq`` (o nonempty, not starting with p) is a nod-path.

    A connector starting with ``p`` can be shortened copy by copy, so this
    holds iff the first letter of ``q`` is reachable from the last letter
    of ``p`` by a walk of positive length.
    """
    return aut.pos[q.first] in aut.reachable(aut.pos[p.last])


_DIVERGED = -1


def is_selfconnected(aut: NodAutomaton, p: QuasiCycle) -> bool:
    """Search for a connector ``o`` with ``pop`` a nod-path and ``p`` not a prefix of ``o``.

    States pair the current letter with how far the connector still agrees
    with ``ppp...`` (the offset modulo ``|p|``), or a marker once it has
    diverged. A connector that ends while still agreeing after a whole
    number of copies is a power of ``p`` and does not count.
    """
    ids = aut.ids(p.word)
    n = len(ids)
    head = ids[0]
    start = []
    for y in aut.succ[ids[-1]]:
        start.append((y, 1 % n) if y == head else (y, _DIVERGED))
    seen = set(start)
    queue = deque(start)
    while queue:
        x, m = queue.popleft()
        if head in aut.succ_sets[x] and (m == _DIVERGED or m != 0):
            return True
        for y in aut.succ[x]:
            if m != _DIVERGED and y == ids[m]:
                state = (y, (m + 1) % n)
            else:
                state = (y, _DIVERGED)
            if state not in seen:
                seen.add(state)
                queue.append(state)
    return False
