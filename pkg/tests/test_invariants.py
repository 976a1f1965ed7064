"""Group-valued knot invariants and their finite-type projections."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import diagrams
from parityknots import (
    OVER_FIRST,
    OVER_SECOND,
    ChordDiagram,
    GaussDiagram,
    SingularKnot,
    TypeRule,
    algebra_to_json,
    alternating_sum,
    delta,
    delta_compact,
    flat_conjugacy_canonical,
    gamma,
    gamma_compact,
    parse_free_code,
    parse_virtual_code,
    position_letters,
    project,
    rotate_basepoint,
    vassiliev_value,
)
from parityknots.groups import KIND_ONE, KIND_TWO

TREFOIL = parse_virtual_code("O1+ O2+ U1+ U2+")
UNKNOT = GaussDiagram((), {}, {})


def test_virtual_trefoil_values():
    assert delta(TREFOIL, 1) == (2, 2, 0)
    assert delta(TREFOIL, 2) == (2, 2, 0, 0, 0)
    mirror = parse_virtual_code("O1- O2- U1- U2-")
    assert delta(mirror, 1) == (-2, -2, 0)
    arrow_reversed = parse_virtual_code("U1+ U2+ O1+ O2+")
    assert delta(arrow_reversed, 1) == (2, 2, 0)


def test_virtual_trefoil_finite_type_values():
    assert algebra_to_json(vassiliev_value(TREFOIL, 1, 1)) == [
        {"point": [0, 0], "poly": {"[0]": "1", "[1]": "2"}}
    ]
    assert algebra_to_json(vassiliev_value(UNKNOT, 1, 1)) == [
        {"point": [0, 0], "poly": {"[0]": "1"}}
    ]
    # degree zero cannot see the trefoil
    assert vassiliev_value(TREFOIL, 1, 0) == vassiliev_value(UNKNOT, 1, 0)
    assert algebra_to_json(vassiliev_value(TREFOIL, 1, 2)) == [
        {"point": [0, 0], "poly": {"[0]": "1", "[1]": "2", "[2]": "1"}}
    ]


def test_classical_diagrams_vanish():
    # every chord of a classical diagram is even, so nothing survives
    classical = parse_virtual_code("O1+ U2+ O3+ U1+ O2+ U3+")
    assert delta(classical, 1) == (0, 0, 0)
    assert delta(classical, 2) == (0, 0, 0, 0, 0)
    assert gamma(classical.underlying(), 2) == (0, 0, 0)


def test_gamma_regression_pins():
    cases = {
        "1 2 3 2 4 5 1 5 3 4": ((-8, 0), (-8, 0, 0)),
        "1 2 2 3 4 5 6 3 6 4 1 5": ((8, 0), (8, 0, 0)),
        "1 2 3 4 5 3 6 2 7 1 5 7 4 6": ((0, 0), (0, -8, 0)),
    }
    for code, (at1, at2) in cases.items():
        d = parse_free_code(code)
        assert gamma(d, 1) == at1
        assert gamma(d, 2) == at2


def test_long_closed_guards():
    closed = ChordDiagram((0, 1, 0, 1), closed=True)
    with pytest.raises(ValueError):
        gamma(closed, 1)
    with pytest.raises(ValueError):
        gamma_compact(ChordDiagram((0, 1, 0, 1)), 1)
    ctref = parse_virtual_code("O1+ O2+ U1+ U2+", closed=True)
    with pytest.raises(ValueError):
        delta(ctref, 1)
    with pytest.raises(ValueError):
        delta_compact(TREFOIL, 1)


def test_compact_frozen_values():
    assert gamma_compact(ChordDiagram((0, 1, 0, 1), closed=True), 1) == (0, 0)
    ctref = parse_virtual_code("O1+ O2+ U1+ U2+", closed=True)
    assert delta_compact(ctref, 1) == (2, 2, 0)
    assert gamma_compact(ChordDiagram((), closed=True), 1) == (0, 0)
    assert delta_compact(GaussDiagram((), {}, {}, closed=True), 2) == (0, 0, 0, 0, 0)


@settings(max_examples=60)
@given(diagrams(max_n=5, closed=True), st.integers(1, 3))
def test_gamma_compact_agrees_with_every_rotation(d, m):
    canon = gamma_compact(d, m)
    for r in range(2 * d.n):
        rotated = rotate_basepoint(d, r)
        cut_open = ChordDiagram(rotated.word)
        assert flat_conjugacy_canonical(gamma(cut_open, m)) == canon


@settings(max_examples=60)
@given(diagrams(max_n=5, signed=True, closed=True), st.integers(1, 2), st.integers(0, 9))
def test_delta_compact_is_rotation_invariant(d, m, r):
    assert delta_compact(rotate_basepoint(d, r), m) == delta_compact(d, m)


@settings(max_examples=60)
@given(diagrams(max_n=6, signed=True, closed=False), st.integers(1, 2), st.data())
def test_delta_is_arrow_blind(d, m, data):
    flips = data.draw(st.sets(st.sampled_from(sorted(d.chord_ids())))) if d.n else set()
    over = {
        c: (OVER_SECOND if tag == OVER_FIRST else OVER_FIRST) if c in flips else tag
        for c, tag in d.over.items()
    }
    reversed_arrows = GaussDiagram(d.word, d.signs, over, closed=d.closed)
    assert delta(reversed_arrows, m) == delta(d, m)


def test_position_letters_shape():
    letters = position_letters(TREFOIL, 1)
    assert len(letters) == 4
    assert all(l.exponent == 1 for l in letters)
    assert {l.kind for l in letters} <= {0, KIND_ONE, KIND_TWO}
    # exponents are attached afterwards, from the chord signs
    assert delta(TREFOIL, 1) != gamma(TREFOIL.underlying(), 1)


def test_vassiliev_is_projected_delta():
    for m, k in ((1, 0), (1, 2), (2, 1)):
        assert vassiliev_value(TREFOIL, m, k) == project(delta(TREFOIL, m), k)


def test_singular_knot_validation():
    with pytest.raises(ValueError):
        SingularKnot(TREFOIL, frozenset({5}))
    knot = SingularKnot(TREFOIL, {0})
    assert knot.singular == frozenset({0})


def test_alternating_sum_fixed_instance():
    both = SingularKnot(TREFOIL, frozenset({0, 1}))
    assert alternating_sum(both, 1, 1).is_zero()
    total = alternating_sum(both, 1, 2)
    assert algebra_to_json(total) == [
        {"point": [0, 0], "poly": {"[2]": "4"}}
    ]
    assert total.terms[(0, 0)].coeffs == {(2,): Fraction(4)}


def test_alternating_sum_rejects_closed():
    ctref = parse_virtual_code("O1+ O2+ U1+ U2+", closed=True)
    with pytest.raises(ValueError):
        alternating_sum(SingularKnot(ctref, frozenset({0})), 1, 1)


@settings(max_examples=40)
@given(diagrams(max_n=5, signed=True, closed=False), st.integers(0, 2), st.data())
def test_alternating_sum_vanishes_past_degree(d, k, data):
    # k+1 singular chords cannot be seen in the degree-k quotient
    if d.n < k + 1:
        return
    chosen = data.draw(
        st.sets(st.sampled_from(sorted(d.chord_ids())), min_size=k + 1, max_size=k + 1)
    )
    assert alternating_sum(SingularKnot(d, frozenset(chosen)), 1, k).is_zero()


def test_alternating_sum_with_no_singular_chords_is_projection():
    knot = SingularKnot(TREFOIL, frozenset())
    assert alternating_sum(knot, 1, 1) == vassiliev_value(TREFOIL, 1, 1)


@settings(max_examples=80)
@given(diagrams(max_n=6, closed=False), st.integers(1, 3))
def test_rule_swap_negates_gamma_coordinates(d, m):
    # typed chords are odd at their level, so the two counting conventions
    # always disagree there: swapping the rule swaps every u with a v,
    # which negates each lattice coordinate and keeps the bit
    even = gamma(d, m, TypeRule.EVEN_LINKED)
    odd = gamma(d, m, TypeRule.ODD_LINKED)
    assert odd == tuple(-x for x in even[:-1]) + (even[-1],)


@settings(max_examples=60)
@given(diagrams(max_n=6, signed=True, closed=False), st.integers(1, 2))
def test_rule_swap_transposes_delta_pairs(d, m):
    even = delta(d, m, TypeRule.EVEN_LINKED)
    odd = delta(d, m, TypeRule.ODD_LINKED)
    swapped = []
    for i in range(m):
        swapped += [even[2 * i + 1], even[2 * i]]
    assert odd == tuple(swapped) + (even[-1],)
