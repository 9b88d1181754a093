from __future__ import annotations

import json
import random
from fractions import Fraction

import pytest
from hypothesis import given

from conftest import games, glove_example, star_game
from intermediate_set.classify import (
    CORE,
    INTERMEDIATE,
    PROPERTIES,
    WEBER,
    classify,
    dummy_players,
    is_additive,
    is_submodular,
    is_superadditive,
    is_supermodular,
    is_weakly_superadditive,
    null_players,
    property_suite,
    reasonable_bounds,
    substitute_pairs,
    weakly_superadditive_violation,
)
from intermediate_set.game import additive_game, all_permutations, coalition, incidence_vector, marginal_vector
from intermediate_set.generators import (
    break_supermodularity,
    outside_weakly_superadditive,
    random_game,
    random_supermodular,
    random_weakly_superadditive,
    with_dummy_player,
    with_null_player,
)
from intermediate_set.geometry import set_equal
from intermediate_set.lovasz import lovasz_eval as lovasz
from intermediate_set.solutions import core, weber

F = Fraction


# -- classification examples ---------------------------------------------------

def test_star_classification():
    c = classify(star_game())
    assert not c.supermodular
    assert c.superadditive
    assert c.substitute_pairs == [(1, 2), (1, 3), (2, 3)]


def test_glove_classification():
    c = classify(glove_example())
    assert c.simple and c.monotone and c.zero_normalized
    assert c.substitute_pairs == [(2, 3)]
    assert c.null_players == 0


def test_additive_classification():
    c = classify(additive_game([1, F(-2, 3), 4]))
    assert c.supermodular and c.submodular and c.superadditive and c.additive
    assert c.dummy_players == 0b111
    assert c.reasonable_bounds == [(1, 1), (F(-2, 3), F(-2, 3)), (4, 4)]


def test_classification_json_is_plain():
    data = classify(glove_example()).to_json()
    json.dumps(data)
    assert data["reasonable_bounds"][0] == ["0", "1"]


def test_weak_superadditivity_witness():
    v = outside_weakly_superadditive(3, 1)
    A, i = weakly_superadditive_violation(v)
    assert v[A | 1 << (i - 1)] < v[A] + v[1 << (i - 1)]


def test_null_and_dummy_detection():
    v = with_null_player(3, 2, seed=4)
    assert null_players(v) & 0b010
    w = with_dummy_player(3, 3, seed=4)
    assert dummy_players(w) & 0b100


@given(games(1, 3))
def test_classification_invariants(v):
    c = classify(v)
    if c.supermodular and c.submodular:
        assert c.additive
    if c.supermodular:
        assert c.superadditive and c.weakly_superadditive
    assert all(lo <= hi for lo, hi in c.reasonable_bounds)
    assert c.null_players & ~c.dummy_players == 0 or not c.zero_normalized


# -- supermodularity equivalences ----------------------------------------------

def _midpoint_concave(v, rng):
    n = v.n
    pairs = [(incidence_vector(A, n), incidence_vector(B, n)) for A in range(1 << n) for B in range(1 << n)]
    for _ in range(40):
        pairs.append(tuple(tuple(F(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(n)) for _ in range(2)))
    for x, y in pairs:
        mid = tuple((a + b) / 2 for a, b in zip(x, y))
        if lovasz(v, mid) < (lovasz(v, x) + lovasz(v, y)) / 2:
            return False
    return True


@pytest.mark.parametrize("seed", range(16))
def test_supermodularity_four_way(seed):
    base = random_supermodular(3, seed)
    v = base if seed % 2 == 0 else break_supermodularity(base, seed)
    rng = random.Random(seed)
    C = core(v)
    facts = [
        is_supermodular(v),
        all(C.contains(marginal_vector(v, p)) for p in all_permutations(3)),
        set_equal(C, weber(v)),
        _midpoint_concave(v, rng),
    ]
    assert len(set(facts)) == 1
    assert facts[0] == (seed % 2 == 0)


def test_negation_swaps_super_and_submodularity():
    v = random_supermodular(3, 2, density=1.0)
    assert is_submodular(-v) and not is_submodular(v)


# -- weak superadditivity and individual rationality ---------------------------

@pytest.mark.parametrize("n", [2, 3, 4])
def test_weak_superadditivity_iff_marginal_vectors_rational(n):
    rng = random.Random(n)
    corpus = [random_game(n, rng) for _ in range(20)]
    corpus += [random_weakly_superadditive(n, rng) for _ in range(20)]
    corpus += [outside_weakly_superadditive(n, rng) for _ in range(10)]
    for v in corpus:
        rational = all(
            x[i] >= v[1 << i] for p in all_permutations(n) for x in [marginal_vector(v, p)] for i in range(n)
        )
        assert rational == is_weakly_superadditive(v)


def test_weak_superadditivity_exhaustive_on_small_grid():
    # all two-player games with values in {-1, 0, 1}
    for a in (-1, 0, 1):
        for b in (-1, 0, 1):
            for c in (-1, 0, 1):
                v = additive_game([0, 0])
                v = type(v)(2, [0, a, b, c])
                rational = all(
                    marginal_vector(v, p)[i] >= v[1 << i] for p in all_permutations(2) for i in range(2)
                )
                assert rational == is_weakly_superadditive(v) == is_superadditive(v)


# -- property suite ------------------------------------------------------------

def test_suite_report_shape():
    r = property_suite([star_game()], INTERMEDIATE, seed=1)
    assert r["solution"] == INTERMEDIATE and r["n"] == 3 and r["games"] == 1
    assert set(r["properties"]) == set(PROPERTIES)
    json.dumps(r)


def test_etp_fails_on_star():
    r = property_suite([star_game()], INTERMEDIATE, properties=["ETP"])
    res = r["properties"]["ETP"]
    assert res["status"] == "fail"
    i, j = res["witness"]["pair"]
    x = res["witness"]["point"]
    assert x[i - 1] != x[j - 1]


def test_weber_etp_fails_on_star():
    assert property_suite([star_game()], WEBER, properties=["ETP"])["properties"]["ETP"]["status"] == "fail"


def test_core_ne_fails_on_empty_core():
    from conftest import disconnected_simple

    r = property_suite([disconnected_simple()], CORE, properties=["NE"])
    assert r["properties"]["NE"] == {"status": "fail", "witness": {"game": 0}}


def test_intermediate_con_fails_on_star():
    assert property_suite([star_game()], INTERMEDIATE, properties=["CON"])["properties"]["CON"]["status"] == "fail"


def test_ir_fails_outside_gamma_star_with_marginal_witness():
    v = outside_weakly_superadditive(3, 0)
    for sol in (INTERMEDIATE, WEBER):
        res = property_suite([v], sol, properties=["IR"])["properties"]["IR"]
        assert res["status"] == "fail"
        x = tuple(F(c) for c in res["witness"]["point"])
        i = res["witness"]["player"]
        assert x[i - 1] < v[1 << (i - 1)]


def test_suba_and_cov_pass_on_random_pair():
    rng = random.Random(3)
    pair = [random_game(3, rng), random_game(3, rng)]
    for sol in (INTERMEDIATE, WEBER):
        r = property_suite(pair, sol, seed=5, properties=["SUBA", "COV", "AN"])
        assert all(p["status"] == "pass" for p in r["properties"].values())


def test_core_supa_passes():
    rng = random.Random(8)
    pair = [random_supermodular(3, rng), random_supermodular(3, rng)]
    assert property_suite(pair, CORE, properties=["SUPA"])["properties"]["SUPA"]["status"] == "pass"


def test_np_and_dum_hold_for_all_solutions():
    corpus = [with_null_player(3, 1, s) for s in range(3)] + [with_dummy_player(3, 2, s) for s in range(3)]
    for sol in (CORE, INTERMEDIATE, WEBER):
        r = property_suite(corpus, sol, properties=["NP", "DUM"])
        assert r["properties"]["NP"]["status"] == "pass"
        assert r["properties"]["DUM"]["status"] == "pass"


def test_suite_rejects_bad_input():
    with pytest.raises(ValueError):
        property_suite([], INTERMEDIATE)
    with pytest.raises(ValueError):
        property_suite([star_game(), random_game(2, 0)], INTERMEDIATE)
    with pytest.raises(ValueError):
        property_suite([star_game()], "nucleolus")
    with pytest.raises(ValueError):
        property_suite([star_game()], INTERMEDIATE, properties=["XYZ"])


def test_suite_is_deterministic():
    pair = [random_game(3, 1), random_game(3, 2)]
    assert property_suite(pair, WEBER, seed=9) == property_suite(pair, WEBER, seed=9)


def test_null_player_bounds_and_substitutes():
    v = with_null_player(3, 3, 0)
    assert coalition([3]) & null_players(v)
    assert reasonable_bounds(v)[2] == (0, 0)
    # a null player substitutes for another player only if that one is null too
    assert ((1, 3) in substitute_pairs(v)) == bool(null_players(v) & 1)
