"""The parity filtration on chord diagrams.

A chord is odd when it interleaves an odd number of other chords.  The
filtration step f deletes every odd chord at once; iterating f sorts the
chords of a diagram into levels.  With a depth cap m:

    index(c) = the smallest k <= m-1 such that c is odd in f^k(D),
               or m if c stays even through all examined levels.

Each chord of index k < m also receives a type, One or Two, read off from
the chords linked with it inside f^k(D).  Two counting rules are offered
because the source description of the rule is ambiguous; EVEN_LINKED is
the default: type One iff the number of *even* chords of f^k(D) linked
with c is even.  ODD_LINKED counts the odd chords instead.

Interleaving of two surviving chords never depends on deleted chords, so
the pairwise linking relation is computed once and reused at every level.

Worked example (word 1 2 1 3 2 3, m = 2): chords 1 and 3 are odd at level
0, chord 2 interleaves both of them and survives everything, so the index
map is {1: 0, 3: 0, 2: 2}.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .diagram import ChordDiagram, Diagram, GaussDiagram, endpoints

TYPE_ONE = 1
TYPE_TWO = 2


class TypeRule(Enum):
    """Which parity class of linked chords decides a chord's type."""

    EVEN_LINKED = "even-linked"
    ODD_LINKED = "odd-linked"


def _linked_sets(word: tuple[int, ...]) -> dict[int, set[int]]:
    """Full pairwise interleaving relation of the diagram."""
    ends = endpoints(word)
    ids = list(ends)
    out: dict[int, set[int]] = {c: set() for c in ids}
    for i, c in enumerate(ids):
        c1, c2 = ends[c]
        for d in ids[i + 1 :]:
            d1, d2 = ends[d]
            if (c1 < d1 < c2) != (c1 < d2 < c2):
                out[c].add(d)
                out[d].add(c)
    return out


def odd_chords(diagram: Diagram) -> frozenset[int]:
    """Chords interleaving an odd number of others."""
    links = _linked_sets(diagram.word)
    return frozenset(c for c, ds in links.items() if len(ds) % 2 == 1)


def f_step(diagram: Diagram) -> Diagram:
    """Delete all odd chords; ids are preserved, decorations follow."""
    dead = odd_chords(diagram)
    word = tuple(c for c in diagram.word if c not in dead)
    if isinstance(diagram, GaussDiagram):
        return GaussDiagram(
            word,
            {c: s for c, s in diagram.signs.items() if c not in dead},
            {c: o for c, o in diagram.over.items() if c not in dead},
            diagram.closed,
        )
    return ChordDiagram(word, diagram.closed)


def _filtration(word: tuple[int, ...], m: int):
    """Index map plus, per level, the sets needed for typing.

    Returns (index, levels) where levels[k] = (alive, odd) as sets of ids,
    for each examined level k (the list stops early once no chord is odd,
    since the filtration is stationary from there on).
    """
    if m < 1:
        raise ValueError("the level cap m must be >= 1")
    links = _linked_sets(word)
    alive = set(links)
    index: dict[int, int] = {}
    levels: list[tuple[set[int], set[int]]] = []
    for k in range(m):
        odd = {c for c in alive if len(links[c] & alive) % 2 == 1}
        levels.append((set(alive), odd))
        for c in odd:
            index[c] = k
        alive -= odd
        if not odd:
            break
    for c in links:
        index.setdefault(c, m)
    return index, levels, links


@dataclass(frozen=True)
class IndexAssignment:
    index: dict[int, int]
    m: int


@dataclass(frozen=True)
class TypeAssignment:
    """Types (TYPE_ONE/TYPE_TWO) for every chord of index < m."""

    ctype: dict[int, int]
    rule: TypeRule


def index_assignment(diagram: Diagram, m: int) -> IndexAssignment:
    index, _levels, _links = _filtration(diagram.word, m)
    return IndexAssignment(index, m)


def type_assignment(
    diagram: Diagram, m: int, rule: TypeRule = TypeRule.EVEN_LINKED
) -> TypeAssignment:
    _index, ctype = assignments(diagram, m, rule)
    return TypeAssignment(ctype, rule)


def assignments(
    diagram: Diagram, m: int, rule: TypeRule = TypeRule.EVEN_LINKED
) -> tuple[dict[int, int], dict[int, int]]:
    """One-pass (index, type) maps; what the invariants consume."""
    index, levels, links = _filtration(diagram.word, m)
    ctype: dict[int, int] = {}
    for c, k in index.items():
        if k >= m:
            continue
        alive, odd = levels[k]
        neighbours = links[c] & alive
        evens = sum(1 for d in neighbours if d not in odd)
        count = evens if rule is TypeRule.EVEN_LINKED else len(neighbours) - evens
        ctype[c] = TYPE_ONE if count % 2 == 0 else TYPE_TWO
    return index, ctype
