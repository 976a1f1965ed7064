"""Reidemeister moves on diagram words, random walks, and the invariance fuzzer.

Moves act on the word combinatorially and preserve chord ids: removals
drop ids, additions mint fresh ones above the current maximum, and the
triangle move only permutes endpoints.  Decorations (signs, over ends)
travel with their chords; over tags are recomputed from the physical
over end whenever endpoint order can change.

Site detection is sound, not complete: a reported site always yields a
legal move, but no attempt is made to find moves that only become
visible after isotopy of the word.  That is all the fuzzer needs, since
it only ever walks forward from a known diagram.

Site conventions (all positions refer to the current word):

* R1Add      site (slot,)            insert a leaf chord at the slot
* R1Remove   site (chord,)           chord whose ends are adjacent
* R2Add      site (s, t, pattern)    slots s <= t, pattern "nested" or
                                     "interleaved"
* R2Remove   site (c, d)             parallel pair, c < d
* R3         site ((i,j), (i,j), (i,j))  three disjoint adjacent position
                                     pairs forming a triangle
* Virtualize site (chord,)           flip which end is the over end

Decorations are only present on Gauss-diagram additions: R1Add carries
(sign, over), R2Add carries (sign_of_first_chord, over_first, over_second);
the second R2 chord gets the opposite sign.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Callable

from .diagram import (
    NEGATIVE,
    OVER_FIRST,
    OVER_SECOND,
    POSITIVE,
    ChordDiagram,
    Diagram,
    GaussDiagram,
    diagram_to_json,
    endpoints,
    random_diagram,
)
from .parity import TypeRule


class MoveKind(Enum):
    R1_ADD = "R1Add"
    R1_REMOVE = "R1Remove"
    R2_ADD = "R2Add"
    R2_REMOVE = "R2Remove"
    R3 = "R3"
    VIRTUALIZE = "Virtualize"


class StaleMove(ValueError):
    """The move instance does not fit the diagram it was applied to."""


@dataclass(frozen=True)
class MoveInstance:
    kind: MoveKind
    site: tuple
    decoration: tuple | None = None


_R2_PATTERNS = ("nested", "interleaved")


# --- site detection -------------------------------------------------------


def _slot_count(diagram: Diagram) -> int:
    """Insertion slots: gaps between consecutive positions.

    A long word of length L has L+1 slots; a closed one has L (slot L
    would coincide with slot 0), except the empty circle which still has
    its single slot.
    """
    size = len(diagram.word)
    if diagram.closed:
        return size if size else 1
    return size + 1


def _adjacent_pairs(word: tuple[int, ...], closed: bool) -> list[tuple[int, int]]:
    pairs = [(i, i + 1) for i in range(len(word) - 1)]
    if closed and len(word) >= 2:
        pairs.append((len(word) - 1, 0))
    return pairs


def _r1_sites(diagram: Diagram) -> list[int]:
    word = diagram.word
    out = []
    for i, j in _adjacent_pairs(word, diagram.closed):
        if word[i] == word[j] and word[i] not in out:
            out.append(word[i])
    return out


def _parallel_pair_splits(
    diagram: Diagram, pair_positions: list[tuple[int, int]]
) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """Ways to split four chord ends into two disjoint adjacent pairs."""
    return [
        (p, q)
        for p, q in combinations(pair_positions, 2)
        if not set(p) & set(q)
    ]


def _r2_groups(diagram: Diagram) -> dict[frozenset[int], list[tuple[int, int]]]:
    word = diagram.word
    groups: dict[frozenset[int], list[tuple[int, int]]] = {}
    for i, j in _adjacent_pairs(word, diagram.closed):
        if word[i] != word[j]:
            groups.setdefault(frozenset((word[i], word[j])), []).append((i, j))
    return groups


def _r2_sites(diagram: Diagram) -> list[tuple[int, int]]:
    out = []
    for key, plist in _r2_groups(diagram).items():
        if not _parallel_pair_splits(diagram, plist):
            continue
        c, d = sorted(key)
        if isinstance(diagram, GaussDiagram) and diagram.signs[c] + diagram.signs[d] != 0:
            continue
        out.append((c, d))
    return sorted(out)


def _r3_sites(diagram: Diagram) -> list[tuple]:
    word = diagram.word
    groups = _r2_groups(diagram)
    neighbours: dict[int, set[int]] = {}
    for key in groups:
        a, b = key
        neighbours.setdefault(a, set()).add(b)
        neighbours.setdefault(b, set()).add(a)
    sites = set()
    for a in sorted(neighbours):
        for b in sorted(neighbours[a]):
            if b <= a:
                continue
            for c in sorted(neighbours[a] & neighbours[b]):
                if c <= b:
                    continue
                for pa in groups[frozenset((a, b))]:
                    for pb in groups[frozenset((a, c))]:
                        for pc in groups[frozenset((b, c))]:
                            spots = set(pa) | set(pb) | set(pc)
                            if len(spots) == 6:
                                sites.add(tuple(sorted((pa, pb, pc))))
    return sorted(sites)


def _r1_decorations(signed: bool) -> list[tuple | None]:
    if not signed:
        return [None]
    return [
        (sign, over)
        for sign in (POSITIVE, NEGATIVE)
        for over in (OVER_FIRST, OVER_SECOND)
    ]


def _r2_decorations(signed: bool) -> list[tuple | None]:
    if not signed:
        return [None]
    return [
        (sign, o1, o2)
        for sign in (POSITIVE, NEGATIVE)
        for o1 in (OVER_FIRST, OVER_SECOND)
        for o2 in (OVER_FIRST, OVER_SECOND)
    ]


def _default_kinds(diagram: Diagram) -> set[MoveKind]:
    kinds = {
        MoveKind.R1_ADD,
        MoveKind.R1_REMOVE,
        MoveKind.R2_ADD,
        MoveKind.R2_REMOVE,
        MoveKind.R3,
    }
    if isinstance(diagram, GaussDiagram):
        kinds.add(MoveKind.VIRTUALIZE)
    return kinds


def enumerate_moves(diagram: Diagram, kinds=None) -> list[MoveInstance]:
    """Every applicable move instance, decorations included.

    Addition counts grow quadratically in the word length, so this is
    meant for small diagrams and tests; the walk sampler below draws
    additions arithmetically instead.  Virtualize is silently dropped
    for unsigned diagrams.
    """
    signed = isinstance(diagram, GaussDiagram)
    allowed = set(kinds) if kinds is not None else _default_kinds(diagram)
    if not signed:
        allowed.discard(MoveKind.VIRTUALIZE)
    out: list[MoveInstance] = []
    slots = _slot_count(diagram)
    if MoveKind.R1_ADD in allowed:
        for slot in range(slots):
            for deco in _r1_decorations(signed):
                out.append(MoveInstance(MoveKind.R1_ADD, (slot,), deco))
    if MoveKind.R1_REMOVE in allowed:
        for c in _r1_sites(diagram):
            out.append(MoveInstance(MoveKind.R1_REMOVE, (c,)))
    if MoveKind.R2_ADD in allowed:
        for s in range(slots):
            for t in range(s, slots):
                for pattern in _R2_PATTERNS:
                    for deco in _r2_decorations(signed):
                        out.append(MoveInstance(MoveKind.R2_ADD, (s, t, pattern), deco))
    if MoveKind.R2_REMOVE in allowed:
        for c, d in _r2_sites(diagram):
            out.append(MoveInstance(MoveKind.R2_REMOVE, (c, d)))
    if MoveKind.R3 in allowed:
        for site in _r3_sites(diagram):
            out.append(MoveInstance(MoveKind.R3, site))
    if MoveKind.VIRTUALIZE in allowed:
        for c in diagram.chord_ids():
            out.append(MoveInstance(MoveKind.VIRTUALIZE, (c,)))
    return out


# --- applying moves -------------------------------------------------------


def _fresh_ids(word: tuple[int, ...], count: int) -> list[int]:
    base = max(word) + 1 if word else 0
    return [base + i for i in range(count)]


def _rebuild(diagram: Diagram, word, signs=None, over=None) -> Diagram:
    if isinstance(diagram, GaussDiagram):
        return GaussDiagram(tuple(word), signs, over, diagram.closed)
    return ChordDiagram(tuple(word), diagram.closed)


def _without(mapping: dict, drop: tuple[int, ...]) -> dict:
    return {k: v for k, v in mapping.items() if k not in drop}


def _check_slot(diagram: Diagram, slot) -> None:
    if not isinstance(slot, int) or not 0 <= slot < _slot_count(diagram):
        raise StaleMove(f"slot {slot!r} out of range")


def _addition_decoration(diagram: Diagram, move: MoveInstance, arity: int):
    """Validate the decoration tuple for an addition; None for free diagrams."""
    deco = move.decoration
    if not isinstance(diagram, GaussDiagram):
        if deco is not None:
            raise StaleMove("free diagrams take no decorations")
        return None
    if deco is None or len(deco) != arity:
        raise StaleMove(f"{move.kind.value} on a Gauss diagram needs {arity} decoration fields")
    if deco[0] not in (POSITIVE, NEGATIVE):
        raise StaleMove("decoration sign must be +1 or -1")
    for over in deco[1:]:
        if over not in (OVER_FIRST, OVER_SECOND):
            raise StaleMove("decoration over tags must be first/second")
    return deco


def _apply_r1_add(diagram: Diagram, move: MoveInstance) -> Diagram:
    if len(move.site) != 1:
        raise StaleMove("R1Add site is a single slot")
    (slot,) = move.site
    _check_slot(diagram, slot)
    deco = _addition_decoration(diagram, move, 2)
    (c,) = _fresh_ids(diagram.word, 1)
    word = diagram.word[:slot] + (c, c) + diagram.word[slot:]
    if deco is None:
        return _rebuild(diagram, word)
    signs = {**diagram.signs, c: deco[0]}
    over = {**diagram.over, c: deco[1]}
    return _rebuild(diagram, word, signs, over)


def _apply_r1_remove(diagram: Diagram, move: MoveInstance) -> Diagram:
    if len(move.site) != 1:
        raise StaleMove("R1Remove site is a single chord")
    (c,) = move.site
    if c not in _r1_sites(diagram):
        raise StaleMove(f"chord {c!r} has no adjacent ends")
    word = tuple(x for x in diagram.word if x != c)
    if isinstance(diagram, GaussDiagram):
        return _rebuild(diagram, word, _without(diagram.signs, (c,)), _without(diagram.over, (c,)))
    return _rebuild(diagram, word)


def _apply_r2_add(diagram: Diagram, move: MoveInstance) -> Diagram:
    if len(move.site) != 3:
        raise StaleMove("R2Add site is (slot, slot, pattern)")
    s, t, pattern = move.site
    _check_slot(diagram, s)
    _check_slot(diagram, t)
    if s > t:
        raise StaleMove("R2Add slots must satisfy s <= t")
    if pattern not in _R2_PATTERNS:
        raise StaleMove(f"unknown R2 pattern {pattern!r}")
    deco = _addition_decoration(diagram, move, 3)
    x, y = _fresh_ids(diagram.word, 2)
    second = (y, x) if pattern == "nested" else (x, y)
    word = diagram.word[:s] + (x, y) + diagram.word[s:t] + second + diagram.word[t:]
    if deco is None:
        return _rebuild(diagram, word)
    sign, over_x, over_y = deco
    signs = {**diagram.signs, x: sign, y: -sign}
    over = {**diagram.over, x: over_x, y: over_y}
    return _rebuild(diagram, word, signs, over)


def _apply_r2_remove(diagram: Diagram, move: MoveInstance) -> Diagram:
    if len(move.site) != 2:
        raise StaleMove("R2Remove site is a chord pair")
    c, d = move.site
    if tuple(sorted((c, d))) not in _r2_sites(diagram):
        raise StaleMove(f"chords {c!r}, {d!r} do not form a parallel pair here")
    word = tuple(x for x in diagram.word if x not in (c, d))
    if isinstance(diagram, GaussDiagram):
        return _rebuild(diagram, word, _without(diagram.signs, (c, d)), _without(diagram.over, (c, d)))
    return _rebuild(diagram, word)


def _apply_r3(diagram: Diagram, move: MoveInstance) -> Diagram:
    site = tuple(sorted(tuple(p) for p in move.site))
    if site not in _r3_sites(diagram):
        raise StaleMove("position pairs do not form a triangle here")
    word = list(diagram.word)
    swap: dict[int, int] = {}
    for i, j in site:
        word[i], word[j] = word[j], word[i]
        swap[i], swap[j] = j, i
    if not isinstance(diagram, GaussDiagram):
        return _rebuild(diagram, word)
    # over ends move with their positions; tags are relative to occurrence
    # order, which the swaps may flip
    old_ends = endpoints(diagram.word)
    new_ends = endpoints(tuple(word))
    over: dict[int, int] = {}
    for c, (p1, p2) in old_ends.items():
        over_pos = p1 if diagram.over[c] == OVER_FIRST else p2
        over_pos = swap.get(over_pos, over_pos)
        over[c] = OVER_FIRST if over_pos == new_ends[c][0] else OVER_SECOND
    return _rebuild(diagram, word, dict(diagram.signs), over)


def _apply_virtualize(diagram: Diagram, move: MoveInstance) -> Diagram:
    if not isinstance(diagram, GaussDiagram):
        raise StaleMove("virtualization needs crossing decorations")
    if len(move.site) != 1:
        raise StaleMove("Virtualize site is a single chord")
    (c,) = move.site
    if c not in diagram.over:
        raise StaleMove(f"chord {c!r} not in diagram")
    over = dict(diagram.over)
    over[c] = OVER_SECOND if over[c] == OVER_FIRST else OVER_FIRST
    return _rebuild(diagram, diagram.word, dict(diagram.signs), over)


_APPLY: dict[MoveKind, Callable[[Diagram, MoveInstance], Diagram]] = {
    MoveKind.R1_ADD: _apply_r1_add,
    MoveKind.R1_REMOVE: _apply_r1_remove,
    MoveKind.R2_ADD: _apply_r2_add,
    MoveKind.R2_REMOVE: _apply_r2_remove,
    MoveKind.R3: _apply_r3,
    MoveKind.VIRTUALIZE: _apply_virtualize,
}


def apply_move(diagram: Diagram, move: MoveInstance) -> Diagram:
    """Apply one move; raises StaleMove when the site no longer fits."""
    return _APPLY[move.kind](diagram, move)


# --- JSON round trip ------------------------------------------------------


def move_to_json(move: MoveInstance) -> dict:
    def plain(x):
        return [plain(y) for y in x] if isinstance(x, tuple) else x

    return {
        "kind": move.kind.value,
        "site": plain(move.site),
        "decoration": plain(move.decoration) if move.decoration is not None else None,
    }


def move_from_json(data: dict) -> MoveInstance:
    def tup(x):
        return tuple(tup(y) for y in x) if isinstance(x, list) else x

    deco = data.get("decoration")
    return MoveInstance(
        MoveKind(data["kind"]),
        tup(data["site"]),
        tup(deco) if deco is not None else None,
    )


# --- random walks ---------------------------------------------------------


def _sample_slot_pair(rng: random.Random, slots: int) -> tuple[int, int]:
    """Uniform unordered slot pair (s <= t) by triangular unranking."""
    r = rng.randrange(slots * (slots + 1) // 2)
    for s in range(slots):
        row = slots - s
        if r < row:
            return s, s + r
        r -= row
    raise AssertionError("unranking fell off the triangle")


def _sample_move(
    diagram: Diagram,
    rng: random.Random,
    allowed: set[MoveKind],
    add_bias: float,
    max_chords: int,
) -> MoveInstance | None:
    signed = isinstance(diagram, GaussDiagram)
    slots = _slot_count(diagram)
    n = diagram.n

    r1_deco = _r1_decorations(signed)
    r2_deco = _r2_decorations(signed)
    r1_count = slots * len(r1_deco) if MoveKind.R1_ADD in allowed and n + 1 <= max_chords else 0
    r2_count = (
        (slots * (slots + 1) // 2) * len(_R2_PATTERNS) * len(r2_deco)
        if MoveKind.R2_ADD in allowed and n + 2 <= max_chords
        else 0
    )
    total_add = r1_count + r2_count

    others: list[MoveInstance] = []
    if MoveKind.R1_REMOVE in allowed:
        others += [MoveInstance(MoveKind.R1_REMOVE, (c,)) for c in _r1_sites(diagram)]
    if MoveKind.R2_REMOVE in allowed:
        others += [MoveInstance(MoveKind.R2_REMOVE, site) for site in _r2_sites(diagram)]
    if MoveKind.R3 in allowed:
        others += [MoveInstance(MoveKind.R3, site) for site in _r3_sites(diagram)]
    if signed and MoveKind.VIRTUALIZE in allowed:
        others += [MoveInstance(MoveKind.VIRTUALIZE, (c,)) for c in diagram.chord_ids()]

    if total_add == 0 and not others:
        return None
    if total_add and others:
        do_add = rng.random() < add_bias
    else:
        do_add = total_add > 0

    if not do_add:
        return others[rng.randrange(len(others))]
    if rng.randrange(total_add) < r1_count:
        slot = rng.randrange(slots)
        return MoveInstance(MoveKind.R1_ADD, (slot,), rng.choice(r1_deco))
    s, t = _sample_slot_pair(rng, slots)
    pattern = _R2_PATTERNS[rng.randrange(2)]
    return MoveInstance(MoveKind.R2_ADD, (s, t, pattern), rng.choice(r2_deco))


def random_walk(
    diagram: Diagram,
    steps: int,
    rng_seed: int = 0,
    kinds=None,
    add_bias: float = 0.5,
    max_chords: int = 64,
) -> tuple[Diagram, list[MoveInstance]]:
    """Walk ``steps`` random moves from the diagram; deterministic in rng_seed.

    Additions are chosen with probability add_bias when any non-addition
    move is available, and are suppressed entirely once they would push
    the diagram past max_chords.  Returns the final diagram and the move
    log; the walk stops early only if no allowed move applies.
    """
    rng = random.Random(rng_seed)
    allowed = set(kinds) if kinds is not None else _default_kinds(diagram)
    if not isinstance(diagram, GaussDiagram):
        allowed.discard(MoveKind.VIRTUALIZE)
    current = diagram
    log: list[MoveInstance] = []
    for _ in range(steps):
        move = _sample_move(current, rng, allowed, add_bias, max_chords)
        if move is None:
            break
        current = apply_move(current, move)
        log.append(move)
    return current, log


# --- the fuzzer -----------------------------------------------------------


@dataclass
class FuzzReport:
    trials: int
    violations: list[dict]
    settings: dict
    flat_stats: dict | None = None

    @property
    def ok(self) -> bool:
        return not self.violations


def _flat_stats_update(stats: dict, value: tuple) -> None:
    stats["values"] += 1
    if value[-1] != 0:
        stats["bit_nonzero"] += 1
    for level, coord in enumerate(value[:-1]):
        stats["level_mod4"][level][coord % 4] += 1


def fuzz_invariance(
    trials: int,
    m: int,
    rule: TypeRule = TypeRule.EVEN_LINKED,
    signed: bool = False,
    closed: bool = False,
    seed: int = 0,
    max_steps: int = 30,
    start_chords: int = 8,
    max_chords: int = 64,
    kinds=None,
    add_bias: float = 0.5,
    value_fn=None,
) -> FuzzReport:
    """Hammer an invariant with random walks and report any value changes.

    Each trial draws a random start diagram and a random walk length, then
    compares the invariant before and after the walk.  value_fn defaults
    to the invariant matching the diagram flavour (flat walk value or its
    canonical form for unsigned inputs, signed walk value or its rotation
    minimum otherwise) and is injectable so the machinery itself can be
    tested against deliberately non-invariant functions.
    """
    from . import invariants

    if value_fn is None:
        if signed:
            base = invariants.delta_compact if closed else invariants.delta
        else:
            base = invariants.gamma_compact if closed else invariants.gamma

        def value_fn(diagram):
            return base(diagram, m, rule)

    collect_flat = not signed
    stats = None
    if collect_flat:
        stats = {
            "values": 0,
            "bit_nonzero": 0,
            "level_mod4": [{r: 0 for r in range(4)} for _ in range(m)],
        }

    master = random.Random(seed)
    violations: list[dict] = []
    for trial in range(trials):
        n0 = master.randrange(start_chords + 1)
        start_seed = master.getrandbits(32)
        walk_seed = master.getrandbits(32)
        steps = master.randrange(max_steps + 1)
        start = random_diagram(n0, signed=signed, rng_seed=start_seed, closed=closed)
        before = value_fn(start)
        end, log = random_walk(
            start,
            steps,
            rng_seed=walk_seed,
            kinds=kinds,
            add_bias=add_bias,
            max_chords=max_chords,
        )
        after = value_fn(end)
        if collect_flat and isinstance(before, tuple):
            _flat_stats_update(stats, before)
        if before != after:
            violations.append(
                {
                    "trial": trial,
                    "seed": walk_seed,
                    "start": diagram_to_json(start),
                    "log": [move_to_json(mv) for mv in log],
                    "value_before": list(before) if isinstance(before, tuple) else before,
                    "value_after": list(after) if isinstance(after, tuple) else after,
                }
            )
    settings = {
        "trials": trials,
        "m": m,
        "rule": rule.value,
        "signed": signed,
        "closed": closed,
        "seed": seed,
        "max_steps": max_steps,
        "start_chords": start_chords,
        "max_chords": max_chords,
        "kinds": sorted(k.value for k in kinds) if kinds is not None else None,
        "add_bias": add_bias,
    }
    return FuzzReport(trials, violations, settings, stats)
