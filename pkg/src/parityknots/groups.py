"""The two lattice groups that receive the walk words.

Both groups are generated by two families of shift letters per level
0..m-1 (kind 1, printed u0, u1, ...; kind 2, printed v0, v1, ...) plus a
single toggle letter (kind 0, printed w).  The defining relations are:

  * the toggle squares to the identity;
  * a shift letter moving past any higher-level letter (shift or toggle)
    changes kind, 1 <-> 2, keeping its level and exponent;
  * in the "flat" group every shift letter also squares to the identity;
  * in the "signed" group the two kinds at each level instead share a
    common square, which lands in the centre.

Elements are integer lattice points.  A flat element is a tuple
(x_1, ..., x_m, bit) with bit in {0, 1}: the toggle flips the bit, and a
level-k shift letter moves x_{k+1} by +-1, the direction picked by the
parity of the trailing coordinate sum (the moved coordinate included).
A signed element is (y_1, ..., y_2m, bit): a level-k shift letter always
moves one of the pair (y_{2k+1}, y_{2k+2}) one step, the slot picked by
kind and the trailing parity, the direction by the letter's exponent.
Right multiplication by a letter is exactly one such lattice step, and
distinct lattice points are distinct group elements, which is what makes
canonical forms and ball counts readable straight off the coordinates.

The rewriting normal form implemented at the bottom of this module is an
independent check on all of the above: it never touches coordinates and
manipulates words using only the defining relations.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple

FLAT = "flat"
SIGNED = "signed"

KIND_TOGGLE = 0
KIND_ONE = 1
KIND_TWO = 2


class BitNotZero(ValueError):
    """Conjugacy canonical form asked for an element with the bit set."""


class BoundExceeded(RuntimeError):
    """The rewriting step budget ran out before a fixpoint."""


class Letter(NamedTuple):
    """One generator occurrence: (level, kind, exponent).

    kind 0 is the toggle and lives at level m; kinds 1 and 2 are the two
    shift families at levels 0..m-1.  exponent is +1 or -1 and is ignored
    by the flat group, whose letters are involutions.
    """

    level: int
    kind: int
    exponent: int = 1


def shift(level: int, kind: int, exponent: int = 1) -> Letter:
    return Letter(level, kind, exponent)


def toggle(m: int) -> Letter:
    return Letter(m, KIND_TOGGLE, 1)


def letter_name(letter: Letter) -> str:
    level, kind, exp = letter
    if kind == KIND_TOGGLE:
        return "w"
    base = f"{'u' if kind == KIND_ONE else 'v'}{level}"
    return base if exp > 0 else base + "^-1"


def word_name(word: Iterable[Letter]) -> str:
    names = [letter_name(l) for l in word]
    return " ".join(names) if names else "e"


def _check_group(group: str) -> None:
    if group not in (FLAT, SIGNED):
        raise ValueError(f"unknown group tag {group!r}")


def check_letter(group: str, m: int, letter: Letter) -> None:
    level, kind, exp = letter
    if kind == KIND_TOGGLE:
        if level != m:
            raise ValueError(f"toggle letter must sit at level {m}, got {level}")
    elif kind in (KIND_ONE, KIND_TWO):
        if not 0 <= level < m:
            raise ValueError(f"shift letter level {level} out of range for m={m}")
    else:
        raise ValueError(f"bad letter kind {kind}")
    if exp not in (1, -1):
        raise ValueError(f"bad letter exponent {exp}")


def identity(group: str, m: int):
    _check_group(group)
    if m < 1:
        raise ValueError("m must be >= 1")
    width = m + 1 if group == FLAT else 2 * m + 1
    return (0,) * width


def flat_apply(e: tuple, letter: Letter) -> tuple:
    """Right-multiply a flat element by one letter.

    The parity deciding the shift direction is the sum of the moved
    coordinate, everything after it, and the bit.
    """
    level, kind, _exp = letter
    m = len(e) - 1
    if kind == KIND_TOGGLE:
        return e[:m] + (e[m] ^ 1,)
    s = 0
    for x in e[level:]:
        s += x
    if s & 1:
        delta = -1 if kind == KIND_ONE else 1
    else:
        delta = 1 if kind == KIND_ONE else -1
    out = list(e)
    out[level] += delta
    return tuple(out)


def signed_apply(e: tuple, letter: Letter) -> tuple:
    """Right-multiply a signed element by one letter.

    Kind 1 moves the first slot of its level pair when the trailing sum
    (pair included, bit included) is even, the second slot when odd; kind
    2 does the opposite.  An inverse letter undoes the step it would have
    made: the same slot rule read at parity one lower, with a decrement.
    """
    level, kind, exp = letter
    top = len(e) - 1
    if kind == KIND_TOGGLE:
        return e[:top] + (e[top] ^ 1,)
    s = 0
    for x in e[2 * level :]:
        s += x
    s &= 1
    if exp < 0:
        s ^= 1
    if kind == KIND_ONE:
        idx = 2 * level + s
    else:
        idx = 2 * level + 1 - s
    out = list(e)
    out[idx] += 1 if exp > 0 else -1
    return tuple(out)


def eval_word(group: str, m: int, word: Iterable[Letter], start: tuple | None = None):
    """Fold a word into an element, left letter applied first."""
    _check_group(group)
    e = identity(group, m) if start is None else tuple(start)
    apply_one = flat_apply if group == FLAT else signed_apply
    for letter in word:
        check_letter(group, m, letter)
        e = apply_one(e, letter)
    return e


def coords_to_word(group: str, m: int, e: tuple) -> list[Letter]:
    """A word realizing the element from the identity.

    Greedy: emit the toggle if the bit is set, then fix levels top down;
    at each step the current trailing parity dictates which kind (and for
    the signed group which exponent) moves the wanted coordinate the
    wanted way.  eval_word(group, m, coords_to_word(group, m, e)) == e.
    """
    _check_group(group)
    if e != tuple(int(x) for x in e):
        raise ValueError("element coordinates must be integers")
    word: list[Letter] = []
    if group == FLAT:
        if len(e) != m + 1:
            raise ValueError(f"flat element needs {m + 1} coordinates")
        if e[m]:
            word.append(toggle(m))
        for level in range(m - 1, -1, -1):
            target = e[level]
            rest = sum(e[level + 1 :]) & 1
            cur = 0
            while cur != target:
                s = (cur + rest) & 1
                need = 1 if target > cur else -1
                if (need > 0) == (s == 0):
                    word.append(Letter(level, KIND_ONE, 1))
                else:
                    word.append(Letter(level, KIND_TWO, 1))
                cur += need
        return word
    if len(e) != 2 * m + 1:
        raise ValueError(f"signed element needs {2 * m + 1} coordinates")
    if e[2 * m]:
        word.append(toggle(m))
    for level in range(m - 1, -1, -1):
        t1, t2 = e[2 * level], e[2 * level + 1]
        rest = sum(e[2 * level + 2 :]) & 1
        c1 = c2 = 0
        while (c1, c2) != (t1, t2):
            s = (c1 + c2 + rest) & 1
            if c1 != t1:
                need = 1 if t1 > c1 else -1
                if need > 0:
                    kind = KIND_ONE if s == 0 else KIND_TWO
                else:
                    kind = KIND_TWO if s == 0 else KIND_ONE
                word.append(Letter(level, kind, need))
                c1 += need
            else:
                need = 1 if t2 > c2 else -1
                if need > 0:
                    kind = KIND_TWO if s == 0 else KIND_ONE
                else:
                    kind = KIND_ONE if s == 0 else KIND_TWO
                word.append(Letter(level, kind, need))
                c2 += need
    return word


def mul(group: str, m: int, a: tuple, b: tuple):
    """Product: replay a word for b starting from a."""
    return eval_word(group, m, coords_to_word(group, m, b), start=a)


def inv(group: str, m: int, a: tuple):
    """Inverse: the reversed, exponent-flipped word for a."""
    word = coords_to_word(group, m, a)
    back = [Letter(l.level, l.kind, -l.exponent if l.kind != KIND_TOGGLE else 1)
            for l in reversed(word)]
    return eval_word(group, m, back)


def flat_conjugacy_canonical(e: tuple) -> tuple:
    """Coordinatewise absolute value.

    On bit-0 elements whose shift coordinates are all even (the sublattice
    where closed-diagram values live) the conjugacy class is exactly the set
    of coordinate sign flips, so this is a complete class invariant there.
    Off that sublattice conjugation can change absolute values.
    """
    if e[-1] != 0:
        raise BitNotZero("canonical form requires the bit coordinate to be 0")
    return tuple(abs(x) for x in e[:-1]) + (0,)


def generators(group: str, m: int) -> list[Letter]:
    """All generator letters; the signed group includes inverse letters."""
    _check_group(group)
    out = [Letter(level, kind, 1) for level in range(m) for kind in (KIND_ONE, KIND_TWO)]
    if group == SIGNED:
        out += [Letter(level, kind, -1) for level in range(m) for kind in (KIND_ONE, KIND_TWO)]
    out.append(toggle(m))
    return out


def relations(group: str, m: int) -> list[tuple[tuple[Letter, ...], tuple[Letter, ...]]]:
    """The defining relations, as (left word, right word) pairs."""
    _check_group(group)
    w = toggle(m)
    u = lambda i: Letter(i, KIND_ONE, 1)
    v = lambda i: Letter(i, KIND_TWO, 1)
    rels: list[tuple[tuple[Letter, ...], tuple[Letter, ...]]] = [((w, w), ())]
    if group == FLAT:
        for i in range(m):
            rels.append(((u(i), u(i)), ()))
            rels.append(((v(i), v(i)), ()))
        for i in range(m):
            for j in range(i + 1, m):
                rels.append(((u(i), u(j)), (u(j), v(i))))
                rels.append(((u(i), v(j)), (v(j), v(i))))
            rels.append(((u(i), w), (w, v(i))))
        return rels
    for i in range(m):
        rels.append(((u(i), u(i)), (v(i), v(i))))
    for i in range(m):
        for j in range(i + 1, m):
            rels.append(((u(i), u(j)), (u(j), v(i))))
            rels.append(((u(i), v(j)), (v(j), v(i))))
            rels.append(((u(j), u(i)), (v(i), u(j))))
            rels.append(((v(j), u(i)), (v(i), v(j))))
        rels.append(((u(i), w), (w, v(i))))
    return rels


# --- rewriting oracle ----------------------------------------------------
#
# An independent normal form: only the defining relations are used, never
# the lattice model.  Two passes:
#
#   1. level sorting.  Adjacent ascending-level pairs swap, flipping the
#      kind of the lower letter; toggles normalize and cancel in pairs;
#      inverse pairs (equal squares in the flat group) cancel.  At the
#      fixpoint the word is a toggle followed by level blocks, top level
#      first.
#
#   2. block normalization (signed group only; flat blocks are already
#      canonical once square-free).  Within one level write a for the
#      kind-1 letter and c for (kind-1)^-1 (kind-2), so that the level
#      subgroup is presented by  c a c = a.  The convergent system
#        a c -> c^-1 a     a c^-1 -> c a
#        a^-1 c -> c^-1 a^-1     a^-1 c^-1 -> c a^-1
#      plus free cancellation sorts every block into c^p a^n, which is
#      then spelled back in the original letters.

_REWRITE_DEFAULT_BUDGET = 200_000


class _Budget:
    __slots__ = ("left",)

    def __init__(self, steps: int) -> None:
        self.left = steps

    def spend(self) -> None:
        self.left -= 1
        if self.left < 0:
            raise BoundExceeded("rewriting step budget exhausted")


def _sort_pass(group: str, word: list[Letter], budget: _Budget) -> list[Letter]:
    flat = group == FLAT
    out = list(word)
    i = 0
    while i < len(out) - 1:
        a = out[i]
        b = out[i + 1]
        # cancellation first, then the crossing swap
        if a.kind == KIND_TOGGLE and b.kind == KIND_TOGGLE:
            del out[i : i + 2]
            budget.spend()
            i = max(i - 1, 0)
            continue
        if a.level == b.level and a.kind == b.kind and a.kind != KIND_TOGGLE:
            if flat or a.exponent == -b.exponent:
                del out[i : i + 2]
                budget.spend()
                i = max(i - 1, 0)
                continue
        if a.level < b.level:
            flipped = Letter(a.level, 3 - a.kind, a.exponent)
            out[i] = b
            out[i + 1] = flipped
            budget.spend()
            i = max(i - 1, 0)
            continue
        i += 1
    return out


def _block_normalize(level: int, block: list[Letter], budget: _Budget) -> list[Letter]:
    """Signed-group level block -> the c^p a^n spelling."""
    # a / c alphabet as (symbol, exponent), symbol "a" or "c"
    seq: list[tuple[str, int]] = []
    for letter in block:
        if letter.kind == KIND_ONE:
            seq.append(("a", letter.exponent))
        elif letter.exponent > 0:
            seq.extend((("a", 1), ("c", 1)))
        else:
            seq.extend((("c", -1), ("a", -1)))
    i = 0
    while i < len(seq) - 1:
        s1, e1 = seq[i]
        s2, e2 = seq[i + 1]
        if s1 == s2 and e1 == -e2:
            del seq[i : i + 2]
            budget.spend()
            i = max(i - 1, 0)
            continue
        if s1 == "a" and s2 == "c":
            # a^x c^y -> c^-y a^x : conjugation by a or a^-1 inverts c
            seq[i] = ("c", -e2)
            seq[i + 1] = ("a", e1)
            budget.spend()
            i = max(i - 1, 0)
            continue
        i += 1
    # fixpoint is c^p a^n; spell it back
    p = sum(e for s, e in seq if s == "c")
    n = sum(e for s, e in seq if s == "a")
    out: list[Letter] = []
    for _ in range(abs(p)):
        if p > 0:
            out += [Letter(level, KIND_ONE, -1), Letter(level, KIND_TWO, 1)]
        else:
            out += [Letter(level, KIND_TWO, -1), Letter(level, KIND_ONE, 1)]
    for _ in range(abs(n)):
        out.append(Letter(level, KIND_ONE, 1 if n > 0 else -1))
    return out


def _free_cancel(word: list[Letter], flat: bool) -> list[Letter]:
    """Stack pass removing adjacent inverse (flat: equal) shift pairs."""
    out: list[Letter] = []
    for letter in word:
        if (
            out
            and letter.kind != KIND_TOGGLE
            and out[-1].level == letter.level
            and out[-1].kind == letter.kind
            and (flat or out[-1].exponent == -letter.exponent)
        ):
            out.pop()
            continue
        out.append(letter)
    return out


def rewrite_reduce(
    group: str, m: int, word: Iterable[Letter], max_steps: int = _REWRITE_DEFAULT_BUDGET
) -> tuple[Letter, ...]:
    """Normal form of a word under the defining relations only.

    Deterministic, terminating, and bounded: exceeding ``max_steps``
    raises BoundExceeded rather than returning something half-reduced.
    Two words represent the same element iff their normal forms are equal
    (checked exhaustively at desk scale against the lattice model).
    """
    _check_group(group)
    letters = []
    for letter in word:
        check_letter(group, m, letter)
        exp = letter.exponent
        if group == FLAT or letter.kind == KIND_TOGGLE:
            exp = 1
        letters.append(Letter(letter.level, letter.kind, exp))
    budget = _Budget(max_steps)
    letters = _sort_pass(group, letters, budget)
    if group == FLAT:
        return tuple(letters)
    out: list[Letter] = []
    i = 0
    while i < len(letters):
        if letters[i].kind == KIND_TOGGLE:
            out.append(letters[i])
            i += 1
            continue
        level = letters[i].level
        j = i
        while j < len(letters) and letters[j].level == level:
            j += 1
        out.extend(_block_normalize(level, letters[i:j], budget))
        i = j
    return tuple(_free_cancel(out, False))


def rewrite_equal(group: str, m: int, w1, w2, max_steps: int = _REWRITE_DEFAULT_BUDGET) -> bool:
    return rewrite_reduce(group, m, w1, max_steps) == rewrite_reduce(group, m, w2, max_steps)


# --- Cayley balls ---------------------------------------------------------


@dataclass(frozen=True)
class CayleyBall:
    group: str
    m: int
    radius: int
    nodes: tuple
    dist: dict
    edges: tuple  # (source element, Letter, target element)


def cayley_ball(group: str, m: int, radius: int) -> CayleyBall:
    """Breadth-first ball around the identity.

    Every node at distance < radius is expanded by every generator, so
    the edge list holds each expansion exactly once and all targets stay
    inside the ball.
    """
    if radius < 0:
        raise ValueError("radius must be >= 0")
    gens = generators(group, m)
    apply_one = flat_apply if group == FLAT else signed_apply
    start = identity(group, m)
    dist = {start: 0}
    order = [start]
    edges = []
    queue = deque([start])
    while queue:
        e = queue.popleft()
        if dist[e] >= radius:
            continue
        for g in gens:
            t = apply_one(e, g)
            if t not in dist:
                dist[t] = dist[e] + 1
                order.append(t)
                queue.append(t)
            edges.append((e, g, t))
    return CayleyBall(group, m, radius, tuple(order), dist, tuple(edges))


def cayley_dot(ball: CayleyBall) -> str:
    """The ball as a DOT digraph with generator-labelled edges."""
    def node_id(e: tuple) -> str:
        return ",".join(str(x) for x in e)

    lines = [f'digraph ball_{ball.group}_m{ball.m}_r{ball.radius} {{']
    for e in ball.nodes:
        label = "(" + ", ".join(str(x) for x in e) + ")"
        lines.append(f'  "{node_id(e)}" [label="{label}"];')
    for e, g, t in ball.edges:
        lines.append(f'  "{node_id(e)}" -> "{node_id(t)}" [label="{letter_name(g)}"];')
    lines.append("}")
    return "\n".join(lines)
