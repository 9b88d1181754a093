from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import games, points, rationals, star_game
from intermediate_set.game import GameError, incidence_vector
from intermediate_set.generators import break_supermodularity, random_supermodular
from intermediate_set.lovasz import decompose, lovasz_eval, sorting_permutation
from oracles import lovasz_by_mobius


def test_star_value_at_2_1_0():
    assert lovasz_eval(star_game(), (2, 1, 0)) == 2


def test_decompose_with_ties():
    d = decompose((5, 5, 1))
    assert d.perm == (0, 1, 2)
    assert d.levels == (3, 3, 7)
    assert d.reassemble() == (5, 5, 1)


def test_decompose_grand_coalition_incidence():
    d = decompose((1, 1, 1))
    assert d.levels == (7, 7, 7)


def test_decompose_zero():
    d = decompose((0, 0, 0))
    assert set(d.coefficients) == {0}
    assert d.reassemble() == (0, 0, 0)


def test_explicit_permutation_must_sort():
    with pytest.raises(GameError):
        decompose((1, 2), perm=(0, 1))
    with pytest.raises(GameError):
        lovasz_eval(star_game(), (1, 2, 3), perm=(0, 1, 2))


@given(games(max_n=4))
def test_extension_agrees_with_game_on_incidence_vectors(v):
    for A in range(1 << v.n):
        assert lovasz_eval(v, incidence_vector(A, v.n)) == v[A]


@given(games(max_n=4), st.data())
def test_matches_mobius_formula(v, data):
    x = data.draw(points(v.n))
    assert lovasz_eval(v, x) == lovasz_by_mobius(v.values, v.n, x)


@given(games(max_n=4), st.data())
def test_value_does_not_depend_on_tie_breaking(v, data):
    x = data.draw(st.lists(st.sampled_from([Fraction(-1), Fraction(0), Fraction(1, 2), Fraction(3)]), min_size=v.n, max_size=v.n))
    base = lovasz_eval(v, x)
    for perm in itertools.permutations(range(v.n)):
        if all(x[a] >= x[b] for a, b in zip(perm, perm[1:])):
            assert lovasz_eval(v, x, perm=perm) == base


@given(games(max_n=4), st.data())
def test_positive_homogeneity(v, data):
    x = data.draw(points(v.n))
    lam = data.draw(st.fractions(min_value=0, max_value=5, max_denominator=5))
    assert lovasz_eval(v, [lam * c for c in x]) == lam * lovasz_eval(v, x)


@given(games(min_n=2, max_n=3), st.data())
def test_linear_in_the_game(v, data):
    w = data.draw(games(min_n=v.n, max_n=v.n))
    a, b = data.draw(rationals), data.draw(rationals)
    x = data.draw(points(v.n))
    combo = v.scale(a) + w.scale(b)
    assert lovasz_eval(combo, x) == a * lovasz_eval(v, x) + b * lovasz_eval(w, x)


@given(games(max_n=4), st.data())
def test_shift_by_grand_coalition(v, data):
    x = data.draw(points(v.n))
    shifted = [c + 1 for c in x]
    assert lovasz_eval(v, shifted) == lovasz_eval(v, x) + v[v.grand]


@given(games(max_n=4), st.data())
def test_reassembly(v, data):
    x = data.draw(points(v.n))
    d = decompose(x)
    assert d.reassemble() == tuple(x)
    assert d.perm == sorting_permutation(x)


def _midpoint_violation(v, pairs):
    for x, y in pairs:
        mid = [(a + b) / 2 for a, b in zip(x, y)]
        if lovasz_eval(v, mid) < (lovasz_eval(v, x) + lovasz_eval(v, y)) / 2:
            return x, y
    return None


def _incidence_pairs(n):
    vecs = [incidence_vector(A, n) for A in range(1 << n)]
    return itertools.product(vecs, vecs)


@pytest.mark.parametrize("seed", range(15))
def test_supermodular_games_have_concave_extensions(seed):
    rng = random.Random(seed)
    n = 2 + seed % 3
    v = random_supermodular(n, rng)
    pairs = list(_incidence_pairs(n))
    pairs += [
        (tuple(Fraction(rng.randint(-6, 6), 2) for _ in range(n)), tuple(Fraction(rng.randint(-6, 6), 3) for _ in range(n)))
        for _ in range(100)
    ]
    assert _midpoint_violation(v, pairs) is None


@pytest.mark.parametrize("seed", range(15))
def test_non_supermodular_games_violate_concavity_on_incidence_pairs(seed):
    n = 2 + seed % 3
    v = break_supermodularity(random_supermodular(n, seed), seed)
    assert _midpoint_violation(v, _incidence_pairs(n)) is not None
