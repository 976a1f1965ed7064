"""Walk invariants of free and virtual knot diagrams.

Walking a long diagram from the basepoint and emitting one letter per
chord end gives a word: a chord of index m emits the toggle at both
ends; a chord of index k < m emits its level-k shift letter, the kind
picked by the chord's type.  The flat evaluation of that word is the
long free-knot invariant.  For Gauss diagrams the same base letters are
used with the chord's sign as the exponent (the toggle stays positive),
evaluated in the signed group; arrows are never consulted, which is why
crossing virtualization cannot change the value.

Closed diagrams have no basepoint, so the closed forms quotient it out:
the flat values of all rotations are conjugate, hence share a conjugacy
canonical form, and the signed values are compared lexicographically
over all rotations.

Finite-type data comes from pushing the signed value into the truncated
quotient algebra, and the alternating sum over sign resolutions of a
singular diagram is the derivative-like quantity that vanishes once the
number of singular chords exceeds the truncation degree.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import AlgebraElement, project
from .diagram import ChordDiagram, Diagram, GaussDiagram
from .groups import (
    FLAT,
    KIND_ONE,
    KIND_TWO,
    SIGNED,
    Letter,
    flat_apply,
    flat_conjugacy_canonical,
    identity,
    signed_apply,
    toggle,
)
from .parity import TYPE_ONE, TypeRule, assignments


class CanonicalMismatch(RuntimeError):
    """Two rotations of a closed diagram disagreed on the canonical form.

    This never happens for correct inputs; it is an internal soundness
    alarm, not a user error.
    """


def position_letters(
    diagram: Diagram, m: int, rule: TypeRule = TypeRule.EVEN_LINKED
) -> list[Letter]:
    """The base letter at every chord end, in walk order (exponents +1).

    Indices and types depend only on the unsigned interleaving, so this
    is computed once per diagram and shared by flat and signed walks and
    by every rotation and sign resolution.
    """
    index, ctype = assignments(diagram, m, rule)
    top = toggle(m)
    out: list[Letter] = []
    for c in diagram.word:
        k = index[c]
        if k >= m:
            out.append(top)
        else:
            out.append(Letter(k, KIND_ONE if ctype[c] == TYPE_ONE else KIND_TWO, 1))
    return out


def _fold_flat(m: int, letters) -> tuple:
    e = identity(FLAT, m)
    for letter in letters:
        e = flat_apply(e, letter)
    return e


def _fold_signed(m: int, letters) -> tuple:
    e = identity(SIGNED, m)
    for letter in letters:
        e = signed_apply(e, letter)
    return e


def _signed_letters(diagram: GaussDiagram, letters: list[Letter]) -> list[Letter]:
    """Attach chord signs as exponents; the toggle keeps exponent +1."""
    out = []
    for pos, letter in enumerate(letters):
        if letter.kind == 0:
            out.append(letter)
        else:
            out.append(Letter(letter.level, letter.kind, diagram.signs[diagram.word[pos]]))
    return out


def gamma(
    diagram: ChordDiagram, m: int, rule: TypeRule = TypeRule.EVEN_LINKED
) -> tuple:
    """Flat value of a long unsigned diagram."""
    if diagram.closed:
        raise ValueError("gamma needs a long diagram; use gamma_compact for closed ones")
    return _fold_flat(m, position_letters(diagram, m, rule))


def gamma_compact(
    diagram: ChordDiagram, m: int, rule: TypeRule = TypeRule.EVEN_LINKED
) -> tuple:
    """Conjugacy canonical form shared by all rotations of a closed diagram.

    Every basepoint placement is evaluated; they must all give the same
    canonical form (they are conjugate), and CanonicalMismatch flags any
    disagreement as an internal bug.
    """
    if not diagram.closed:
        raise ValueError("gamma_compact needs a closed diagram")
    letters = position_letters(diagram, m, rule)
    size = len(letters)
    if size == 0:
        return flat_conjugacy_canonical(identity(FLAT, m))
    doubled = letters + letters
    canon = None
    for r in range(size):
        value = flat_conjugacy_canonical(_fold_flat(m, doubled[r : r + size]))
        if canon is None:
            canon = value
        elif value != canon:
            raise CanonicalMismatch(
                f"rotation {r} gives {value}, rotation 0 gives {canon}"
            )
    return canon


def delta(
    diagram: GaussDiagram, m: int, rule: TypeRule = TypeRule.EVEN_LINKED
) -> tuple:
    """Signed value of a long Gauss diagram; arrow-blind by construction."""
    if diagram.closed:
        raise ValueError("delta needs a long diagram; use delta_compact for closed ones")
    letters = _signed_letters(diagram, position_letters(diagram, m, rule))
    return _fold_signed(m, letters)


def delta_compact(
    diagram: GaussDiagram, m: int, rule: TypeRule = TypeRule.EVEN_LINKED
) -> tuple:
    """Lexicographically smallest signed value over all rotations."""
    if not diagram.closed:
        raise ValueError("delta_compact needs a closed diagram")
    letters = _signed_letters(diagram, position_letters(diagram, m, rule))
    size = len(letters)
    if size == 0:
        return identity(SIGNED, m)
    doubled = letters + letters
    return min(_fold_signed(m, doubled[r : r + size]) for r in range(size))


def vassiliev_value(
    diagram: GaussDiagram, m: int, k: int, rule: TypeRule = TypeRule.EVEN_LINKED
) -> AlgebraElement:
    """The signed value pushed into the degree-k quotient algebra."""
    return project(delta(diagram, m, rule), k)


@dataclass(frozen=True)
class SingularKnot:
    """A long Gauss diagram with a set of chords marked singular."""

    base: GaussDiagram
    singular: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "singular", frozenset(self.singular))
        missing = self.singular - set(self.base.word)
        if missing:
            raise ValueError(f"singular chords {sorted(missing)} not in diagram")


def alternating_sum(
    knot: SingularKnot, m: int, k: int, rule: TypeRule = TypeRule.EVEN_LINKED
) -> AlgebraElement:
    """Sum of resolutions, each weighted by (-1)^(number of negative signs).

    A singular chord is resolved to +1 or -1; all 2^s resolutions are
    evaluated.  Indices and types come from the unsigned diagram and are
    computed once: resolutions only flip exponents.
    """
    base = knot.base
    if base.closed:
        raise ValueError("alternating sums are defined on long diagrams")
    letters = position_letters(base, m, rule)
    singular = sorted(knot.singular)
    word = base.word
    total = AlgebraElement.zero(m, k)
    for mask in range(1 << len(singular)):
        signs = dict(base.signs)
        negatives = 0
        for bit, c in enumerate(singular):
            if mask >> bit & 1:
                signs[c] = -1
                negatives += 1
            else:
                signs[c] = 1
        resolved = [
            letter
            if letter.kind == 0
            else Letter(letter.level, letter.kind, signs[word[pos]])
            for pos, letter in enumerate(letters)
        ]
        value = project(_fold_signed(m, resolved), k)
        total = total + (value if negatives % 2 == 0 else -value)
    return total
