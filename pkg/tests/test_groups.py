"""Lattice groups: grid actions, words, rewriting, and Cayley balls."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import dot_is_valid
from parityknots import (
    FLAT,
    SIGNED,
    BitNotZero,
    BoundExceeded,
    Letter,
    cayley_ball,
    cayley_dot,
    coords_to_word,
    eval_word,
    flat_conjugacy_canonical,
    generators,
    identity,
    inv,
    letter_name,
    mul,
    relations,
    rewrite_equal,
    rewrite_reduce,
    shift,
    toggle,
    word_name,
)
from parityknots.groups import KIND_ONE, KIND_TWO, flat_apply, signed_apply

U0 = shift(0, KIND_ONE)
V0 = shift(0, KIND_TWO)
U1 = shift(1, KIND_ONE)
V1 = shift(1, KIND_TWO)


def _elements(group: str, m: int, count: int, seed: int = 0, spread: int = 25):
    rng = random.Random(seed)
    width = m if group == FLAT else 2 * m
    return [
        tuple(rng.randrange(-spread, spread + 1) for _ in range(width))
        + (rng.randrange(2),)
        for _ in range(count)
    ]


@st.composite
def group_points(draw, group: str, m: int):
    width = m if group == FLAT else 2 * m
    coords = draw(st.lists(st.integers(-9, 9), min_size=width, max_size=width))
    bit = draw(st.integers(0, 1))
    return tuple(coords) + (bit,)


def test_identity_widths():
    assert identity(FLAT, 2) == (0, 0, 0)
    assert identity(SIGNED, 2) == (0, 0, 0, 0, 0)
    with pytest.raises(ValueError):
        identity(FLAT, 0)
    with pytest.raises(ValueError):
        identity("other", 1)


def test_flat_action_table():
    e = identity(FLAT, 2)
    assert flat_apply(e, U0) == (1, 0, 0)
    assert flat_apply(e, V0) == (-1, 0, 0)
    assert flat_apply(e, U1) == (0, 1, 0)
    assert flat_apply(e, V1) == (0, -1, 0)
    assert flat_apply(e, toggle(2)) == (0, 0, 1)
    # the shift direction flips with the parity of everything at or above
    # the letter's own level, bit included
    assert flat_apply((0, 1, 0), U0) == (-1, 1, 0)
    assert flat_apply((0, 1, 0), V0) == (1, 1, 0)
    assert flat_apply((0, 1, 0), U1) == (0, 0, 0)
    assert flat_apply((1, 0, 1), U1) == (1, -1, 1)
    assert flat_apply((1, 0, 1), U0) == (2, 0, 1)


def test_signed_action_table():
    e = identity(SIGNED, 1)
    assert signed_apply(e, U0) == (1, 0, 0)
    assert signed_apply(e, V0) == (0, 1, 0)
    assert signed_apply(e, Letter(0, KIND_ONE, -1)) == (0, -1, 0)
    assert signed_apply(e, Letter(0, KIND_TWO, -1)) == (-1, 0, 0)
    assert signed_apply(e, toggle(1)) == (0, 0, 1)
    assert signed_apply((1, 0, 0), U0) == (1, 1, 0)
    assert signed_apply((1, 0, 0), V0) == (2, 0, 0)
    assert signed_apply((1, 0, 0), Letter(0, KIND_ONE, -1)) == (0, 0, 0)
    assert signed_apply((1, 0, 0), Letter(0, KIND_TWO, -1)) == (1, -1, 0)


def test_letter_validation():
    with pytest.raises(ValueError):
        eval_word(FLAT, 2, [toggle(1)])  # toggle must sit at the top level
    with pytest.raises(ValueError):
        eval_word(FLAT, 1, [shift(1, KIND_ONE)])
    with pytest.raises(ValueError):
        eval_word(FLAT, 1, [Letter(0, 7, 1)])
    with pytest.raises(ValueError):
        eval_word(FLAT, 1, [Letter(0, KIND_ONE, 0)])


@pytest.mark.parametrize("group", [FLAT, SIGNED])
@pytest.mark.parametrize("m", [1, 2, 3])
def test_defining_relations_act_identically(group, m):
    rels = relations(group, m)
    expected = 1 + 3 * m + m * (m - 1) if group == FLAT else 1 + 2 * m + 2 * m * (m - 1)
    assert len(rels) == expected
    for e in _elements(group, m, 100, seed=m):
        for lhs, rhs in rels:
            assert eval_word(group, m, lhs, start=e) == eval_word(group, m, rhs, start=e)


@pytest.mark.parametrize("group,m", [(FLAT, 1), (FLAT, 3), (SIGNED, 1), (SIGNED, 3)])
def test_coords_to_word_round_trip_random(group, m):
    for e in _elements(group, m, 150, seed=9):
        word = coords_to_word(group, m, e)
        assert eval_word(group, m, word) == e


@given(group_points(SIGNED, 2), group_points(SIGNED, 2), group_points(SIGNED, 2))
def test_signed_group_axioms(a, b, c):
    e = identity(SIGNED, 2)
    assert mul(SIGNED, 2, mul(SIGNED, 2, a, b), c) == mul(SIGNED, 2, a, mul(SIGNED, 2, b, c))
    assert mul(SIGNED, 2, a, e) == a
    assert mul(SIGNED, 2, e, a) == a
    assert mul(SIGNED, 2, a, inv(SIGNED, 2, a)) == e
    assert mul(SIGNED, 2, inv(SIGNED, 2, a), a) == e


@given(group_points(FLAT, 2), group_points(FLAT, 2))
def test_flat_group_axioms(a, b):
    e = identity(FLAT, 2)
    assert mul(FLAT, 2, a, inv(FLAT, 2, a)) == e
    assert mul(FLAT, 2, mul(FLAT, 2, a, b), inv(FLAT, 2, b)) == a


def test_shift_letters_are_flat_involutions():
    for m in (1, 2):
        for e in _elements(FLAT, m, 40, seed=4):
            for letter in generators(FLAT, m):
                twice = flat_apply(flat_apply(e, letter), letter)
                assert twice == e


@given(group_points(FLAT, 2), group_points(FLAT, 2))
def test_conjugacy_canonical_on_even_sublattice(x, g):
    # doubling puts x in the even sublattice, where sign flips are the
    # whole conjugacy class; off it absolute values are not conserved
    x = tuple(2 * c for c in x[:-1]) + (0,)
    conjugate = mul(FLAT, 2, g, mul(FLAT, 2, x, inv(FLAT, 2, g)))
    assert flat_conjugacy_canonical(conjugate) == flat_conjugacy_canonical(x)
    canon = flat_conjugacy_canonical(x)
    assert flat_conjugacy_canonical(canon) == canon


def test_conjugation_moves_odd_coordinates():
    # witness that the even restriction matters: conjugating the order-two
    # element (0,1,0) by (0,-1,0) lands on (0,-3,0)
    x, g = (0, 1, 0), (0, -1, 0)
    conj = mul(FLAT, 2, g, mul(FLAT, 2, x, inv(FLAT, 2, g)))
    assert conj == (0, -3, 0)


def test_conjugacy_canonical_rejects_set_bit():
    with pytest.raises(BitNotZero):
        flat_conjugacy_canonical((1, 2, 1))


def test_rewrite_frozen_normal_forms():
    # levels sort downward; flat same-letter pairs vanish
    assert rewrite_reduce(FLAT, 1, [U0, U0]) == ()
    assert rewrite_reduce(FLAT, 1, [toggle(1), U0, toggle(1)]) == (V0,)
    assert rewrite_reduce(FLAT, 1, [U0, V0, U0]) == (U0, V0, U0)
    assert rewrite_reduce(FLAT, 2, [U0, U1]) == (U1, V0)
    assert rewrite_reduce(FLAT, 2, [U1, U0]) == (U1, U0)
    assert rewrite_reduce(SIGNED, 1, [V0, V0]) == (U0, U0)
    assert rewrite_reduce(SIGNED, 1, [U0, Letter(0, KIND_ONE, -1)]) == ()
    assert rewrite_reduce(SIGNED, 1, [U0, V0]) == (
        Letter(0, KIND_ONE, -1),
        V0,
        U0,
        U0,
    )
    assert rewrite_reduce(SIGNED, 1, [V0, U0]) == (
        Letter(0, KIND_TWO, -1),
        U0,
        U0,
        U0,
    )


def test_rewrite_equal_spot_checks():
    assert rewrite_equal(SIGNED, 1, [U0, U0], [V0, V0])
    assert not rewrite_equal(SIGNED, 1, [U0, V0], [V0, U0])
    assert rewrite_equal(FLAT, 2, [U0, U1], [U1, V0])


def test_rewrite_budget_is_enforced():
    word = [U0, V0] * 40
    with pytest.raises(BoundExceeded):
        rewrite_reduce(SIGNED, 1, word, max_steps=10)


@pytest.mark.parametrize("group,m,maxlen", [(FLAT, 1, 5), (FLAT, 2, 4), (SIGNED, 1, 4), (SIGNED, 2, 3)])
def test_rewriting_matches_coordinates_at_desk_scale(group, m, maxlen):
    # normal forms and coordinates must induce the same partition of words
    from itertools import product

    gens = generators(group, m)
    nf_by_coords = {}
    coords_by_nf = {}
    for length in range(maxlen + 1):
        for word in product(gens, repeat=length):
            coords = eval_word(group, m, word)
            nf = rewrite_reduce(group, m, word)
            assert nf_by_coords.setdefault(coords, nf) == nf
            assert coords_by_nf.setdefault(nf, coords) == coords


def test_generator_counts():
    assert len(generators(FLAT, 2)) == 5
    assert len(generators(SIGNED, 2)) == 9
    assert toggle(2) in generators(FLAT, 2)


def test_cayley_ball_sizes():
    sizes = [len(cayley_ball(FLAT, 1, r).nodes) for r in range(7)]
    assert sizes == [1, 4, 8, 12, 16, 20, 24]
    assert len(cayley_ball(SIGNED, 1, 1).nodes) == 6


def test_cayley_edges_are_generator_applications():
    ball = cayley_ball(SIGNED, 1, 2)
    for source, letter, target in ball.edges:
        assert signed_apply(source, letter) == target
    ball = cayley_ball(FLAT, 2, 2)
    for source, letter, target in ball.edges:
        assert flat_apply(source, letter) == target


def test_cayley_dot_output_is_well_formed():
    for group, m in ((FLAT, 1), (FLAT, 2), (SIGNED, 1)):
        text = cayley_dot(cayley_ball(group, m, 2))
        assert dot_is_valid(text)


def test_letter_names():
    assert letter_name(U0) == "u0"
    assert letter_name(Letter(1, KIND_TWO, -1)) == "v1^-1"
    assert letter_name(toggle(3)) == "w"
    assert word_name([]) == "e"
    assert word_name([U0, V1]) == "u0 v1"
