"""Chord diagrams and Gauss diagrams as double-occurrence words.

A chord diagram on one circle is stored as the sequence of chord ids met
while walking the circle once: a word in which every id occurs exactly
twice.  Long (1-1 tangle) diagrams use the same word; the basepoint sits
implicitly before position 0, and the arc from the last position back to
position 0 carries no chord ends.  Closed diagrams admit basepoint
rotation; long ones do not.

A Gauss diagram is a chord diagram whose chords carry a sign (+1/-1) and
an arrow.  The arrow is stored as which of the two occurrences of the id
is the overcrossing (departure) end: OVER_FIRST or OVER_SECOND.

Chord ids are plain integers.  The parsers relabel input to dense ids
0..n-1 in first-appearance order; text output uses 1-based labels.  Moves
and rotations keep ids stable so decorations follow their chords.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field

OVER_FIRST = 0
OVER_SECOND = 1

POSITIVE = 1
NEGATIVE = -1


class DiagramError(ValueError):
    """Base class for malformed diagrams and codes."""


class LabelCountError(DiagramError):
    """A chord label does not occur exactly twice."""


class OUMismatch(DiagramError):
    """A virtual-code label lacks exactly one O and one U token."""


class SignMismatch(DiagramError):
    """The two tokens of a virtual-code label carry different signs."""


class CodeSyntaxError(DiagramError):
    """A token cannot be read at all."""


class UnknownChord(DiagramError):
    """A chord id absent from the diagram was referenced."""


class NotClosed(DiagramError):
    """A closed-only operation was applied to a long diagram."""


def _check_word(word: tuple[int, ...]) -> None:
    counts: dict[int, int] = {}
    for c in word:
        counts[c] = counts.get(c, 0) + 1
    bad = sorted(c for c, k in counts.items() if k != 2)
    if bad:
        raise LabelCountError(f"chord ids not occurring exactly twice: {bad}")


@dataclass(frozen=True)
class ChordDiagram:
    """An unsigned chord diagram; ``closed`` distinguishes knots from long knots."""

    word: tuple[int, ...]
    closed: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "word", tuple(self.word))
        _check_word(self.word)

    @property
    def n(self) -> int:
        return len(self.word) // 2

    def chord_ids(self) -> tuple[int, ...]:
        """Ids in first-appearance order."""
        seen: list[int] = []
        for c in self.word:
            if c not in seen:
                seen.append(c)
        return tuple(seen)

    def normalized(self) -> "ChordDiagram":
        """Relabel ids to 0..n-1 in first-appearance order."""
        relabel = {c: i for i, c in enumerate(self.chord_ids())}
        return ChordDiagram(tuple(relabel[c] for c in self.word), self.closed)


@dataclass(frozen=True)
class GaussDiagram:
    """A chord diagram with signs and arrows (a virtual-knot Gauss diagram).

    ``signs`` maps chord id -> +1/-1; ``over`` maps chord id -> OVER_FIRST /
    OVER_SECOND, naming which occurrence in the word is the over end.
    """

    word: tuple[int, ...]
    signs: dict[int, int] = field(default_factory=dict)
    over: dict[int, int] = field(default_factory=dict)
    closed: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "word", tuple(self.word))
        _check_word(self.word)
        ids = set(self.word)
        if set(self.signs) != ids or set(self.over) != ids:
            raise DiagramError("signs/over must be keyed by exactly the chord ids")
        if not all(s in (POSITIVE, NEGATIVE) for s in self.signs.values()):
            raise DiagramError("signs must be +1 or -1")
        if not all(o in (OVER_FIRST, OVER_SECOND) for o in self.over.values()):
            raise DiagramError("over must be OVER_FIRST or OVER_SECOND")

    @property
    def n(self) -> int:
        return len(self.word) // 2

    def chord_ids(self) -> tuple[int, ...]:
        seen: list[int] = []
        for c in self.word:
            if c not in seen:
                seen.append(c)
        return tuple(seen)

    def underlying(self) -> ChordDiagram:
        """Forget signs and arrows."""
        return ChordDiagram(self.word, self.closed)

    def normalized(self) -> "GaussDiagram":
        relabel = {c: i for i, c in enumerate(self.chord_ids())}
        return GaussDiagram(
            tuple(relabel[c] for c in self.word),
            {relabel[c]: s for c, s in self.signs.items()},
            {relabel[c]: o for c, o in self.over.items()},
            self.closed,
        )


Diagram = ChordDiagram | GaussDiagram


def endpoints(word: tuple[int, ...]) -> dict[int, tuple[int, int]]:
    """Map each chord id to its two positions (earlier first)."""
    first: dict[int, int] = {}
    out: dict[int, tuple[int, int]] = {}
    for pos, c in enumerate(word):
        if c in first:
            out[c] = (first[c], pos)
        else:
            first[c] = pos
    return out


def linked(diagram: Diagram, c: int, d: int) -> bool:
    """True iff chords c and d interleave around the circle.

    Exactly one endpoint of d lies strictly between the two endpoints of c
    in the word.  For long diagrams the basepoint arc carries no ends, so
    the linear reading agrees with the circular one.
    """
    ends = endpoints(diagram.word)
    if c not in ends:
        raise UnknownChord(f"chord {c} not in diagram")
    if d not in ends:
        raise UnknownChord(f"chord {d} not in diagram")
    if c == d:
        return False
    c1, c2 = ends[c]
    d1, d2 = ends[d]
    return (c1 < d1 < c2) != (c1 < d2 < c2)


def rotate_basepoint(diagram: Diagram, steps: int) -> Diagram:
    """Move the basepoint of a closed diagram ``steps`` ends forward.

    The word is rotated so that old position ``steps`` becomes position 0.
    Signs stay keyed by chord id; arrows follow their physical endpoints,
    so the over/under occurrence tag is recomputed against the new order.
    """
    if not diagram.closed:
        raise NotClosed("cannot rotate the basepoint of a long diagram")
    size = len(diagram.word)
    if size == 0:
        return diagram
    s = steps % size
    word = diagram.word[s:] + diagram.word[:s]
    if isinstance(diagram, ChordDiagram):
        return ChordDiagram(word, True)
    ends = endpoints(diagram.word)
    over: dict[int, int] = {}
    for c, (p1, p2) in ends.items():
        over_pos = p1 if diagram.over[c] == OVER_FIRST else p2
        q1 = (p1 - s) % size
        q2 = (p2 - s) % size
        new_over = (over_pos - s) % size
        over[c] = OVER_FIRST if new_over == min(q1, q2) else OVER_SECOND
    return GaussDiagram(word, dict(diagram.signs), over, True)


def random_diagram(
    n: int,
    signed: bool = False,
    rng_seed: int = 0,
    closed: bool = False,
) -> Diagram:
    """Uniform random pairing of 2n endpoints; deterministic in rng_seed.

    Ids come out dense in first-appearance order.  With ``signed`` the
    result is a Gauss diagram with uniform signs and arrows.
    """
    rng = random.Random(rng_seed)
    word = [-1] * (2 * n)
    free = list(range(2 * n))
    next_id = 0
    while free:
        p = free.pop(0)
        q = free.pop(rng.randrange(len(free)))
        word[p] = word[q] = next_id
        next_id += 1
    if not signed:
        return ChordDiagram(tuple(word), closed)
    signs = {c: rng.choice((POSITIVE, NEGATIVE)) for c in range(n)}
    over = {c: rng.choice((OVER_FIRST, OVER_SECOND)) for c in range(n)}
    return GaussDiagram(tuple(word), signs, over, closed)


# --- text codes ---------------------------------------------------------

_VIRTUAL_TOKEN = re.compile(r"^([OU])(.+)([+-])$")


def parse_free_code(text: str, closed: bool = False) -> ChordDiagram:
    """Read a free code: whitespace-separated labels, each exactly twice.

    Labels are arbitrary tokens; they are relabelled to 0..n-1 in
    first-appearance order.  Empty input is the unknot.
    """
    tokens = text.split()
    ids: dict[str, int] = {}
    word: list[int] = []
    for tok in tokens:
        if tok not in ids:
            ids[tok] = len(ids)
        word.append(ids[tok])
    return ChordDiagram(tuple(word), closed)


def serialize_free_code(diagram: ChordDiagram) -> str:
    """1-based labels, space separated; inverse of parse on normalized input."""
    return " ".join(str(c + 1) for c in diagram.word)


def parse_virtual_code(text: str, closed: bool = False) -> GaussDiagram:
    """Read a virtual code: tokens O<label><sign> / U<label><sign>.

    Every label must occur exactly once with O and once with U, carrying
    the same sign on both tokens.
    """
    tokens = text.split()
    ids: dict[str, int] = {}
    word: list[int] = []
    signs: dict[int, int] = {}
    roles: dict[int, list[str]] = {}
    for tok in tokens:
        m = _VIRTUAL_TOKEN.match(tok)
        if m is None:
            raise CodeSyntaxError(f"cannot read token {tok!r}")
        role, label, sign_ch = m.groups()
        if label not in ids:
            ids[label] = len(ids)
        c = ids[label]
        sign = POSITIVE if sign_ch == "+" else NEGATIVE
        if c in signs and signs[c] != sign:
            raise SignMismatch(f"label {label!r} carries both signs")
        signs[c] = sign
        roles.setdefault(c, []).append(role)
        word.append(c)
    for label, c in ids.items():
        if sorted(roles[c]) != ["O", "U"]:
            raise OUMismatch(f"label {label!r} needs exactly one O and one U token")
    _check_word(tuple(word))  # catches labels seen once or thrice
    pos_role = [_VIRTUAL_TOKEN.match(tok).group(1) for tok in tokens]
    over: dict[int, int] = {}
    for c, (p1, _p2) in endpoints(tuple(word)).items():
        over[c] = OVER_FIRST if pos_role[p1] == "O" else OVER_SECOND
    return GaussDiagram(tuple(word), signs, over, closed)


def serialize_virtual_code(diagram: GaussDiagram) -> str:
    """Tokens in walk order, 1-based labels; inverse of parse on normalized input."""
    ends = endpoints(diagram.word)
    out: list[str] = []
    for pos, c in enumerate(diagram.word):
        is_first = pos == ends[c][0]
        is_over = (diagram.over[c] == OVER_FIRST) == is_first
        role = "O" if is_over else "U"
        sign_ch = "+" if diagram.signs[c] == POSITIVE else "-"
        out.append(f"{role}{c + 1}{sign_ch}")
    return " ".join(out)


# --- JSON ---------------------------------------------------------------


def diagram_to_json(diagram: Diagram) -> dict:
    """A plain-dict form: {"word": [...], "signs": {...}, "over": {...}, "closed": bool}.

    Free diagrams omit signs/over.  JSON object keys are strings, so chord
    ids are stringified in the decoration maps.
    """
    out: dict = {"word": list(diagram.word), "closed": diagram.closed}
    if isinstance(diagram, GaussDiagram):
        out["signs"] = {str(c): s for c, s in diagram.signs.items()}
        out["over"] = {
            str(c): ("first" if o == OVER_FIRST else "second")
            for c, o in diagram.over.items()
        }
    return out


def diagram_from_json(data: dict) -> Diagram:
    word = tuple(int(c) for c in data["word"])
    closed = bool(data.get("closed", False))
    if "signs" not in data and "over" not in data:
        return ChordDiagram(word, closed)
    signs = {int(c): int(s) for c, s in data["signs"].items()}
    over = {
        int(c): (OVER_FIRST if o == "first" else OVER_SECOND)
        for c, o in data["over"].items()
    }
    return GaussDiagram(word, signs, over, closed)
