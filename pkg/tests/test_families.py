from __future__ import annotations

import itertools
from fractions import Fraction

import pytest

from conftest import disconnected_simple, glove_example, star_game
from intermediate_set.game import Chain, Game, GameError, coalition, enumerate_chains, marginal_vector, unanimity_game
from intermediate_set.families import (
    BALANCED,
    INFEASIBLE,
    LEFT_SURPLUS,
    RIGHT_SURPLUS,
    SimpleGame,
    core_simple,
    enumerate_antichains,
    enumerate_simple_games,
    format_family,
    glove_block_case,
    glove_chain_cases,
    glove_chain_prediction,
    glove_core,
    glove_relabeled,
    intermediate_glove,
    intermediate_glove_relabeled,
    intermediate_simple,
    intermediate_submodular,
    make_glove,
    minimal_winning,
    parse_minimal_winning,
    simplex_face,
)
from intermediate_set.generators import random_submodular
from intermediate_set.geometry import PolyUnion, VPolytope, set_equal, subset
from intermediate_set.solutions import chain_component, core, imputations, intermediate

F = Fraction


def seg(a, b):
    return VPolytope(len(a), [a, b])


def pts(*xs):
    return PolyUnion(len(xs[0]), [(k, VPolytope(len(x), [x]).to_h()) for k, x in enumerate(xs)])


# -- simple games --------------------------------------------------------------

def test_minimal_winning_examples():
    assert minimal_winning(glove_example()) == (coalition([1, 2]), coalition([1, 3]))
    assert minimal_winning(unanimity_game(3, 7)) == (7,)
    assert set(minimal_winning(disconnected_simple())) == {coalition([1]), coalition([2, 3])}


def test_non_simple_input_is_rejected():
    with pytest.raises(GameError):
        minimal_winning(star_game())
    with pytest.raises(GameError):
        intermediate_simple(star_game())


def test_parse_minimal_winning():
    assert parse_minimal_winning("1,2;1,3") == (3, [3, 5])
    assert parse_minimal_winning("1", n=3) == (3, [1])
    with pytest.raises(GameError):
        parse_minimal_winning("1,;;2")
    with pytest.raises(GameError):
        parse_minimal_winning("1,4", n=3)
    assert format_family([3, 5]) == "1,2;1,3"


def test_constructors_agree():
    a = SimpleGame.from_minimal_winning(3, [[1, 2], [1, 3]])
    b = SimpleGame.from_game(glove_example())
    c = SimpleGame.from_minimal_winning(3, [3, 5, 7])
    assert a == b == c
    assert a.game() == glove_example()


def test_glove_example_faces():
    v = glove_example()
    expected = PolyUnion(3, [(0, seg((1, 0, 0), (0, 1, 0)).to_h()), (1, seg((1, 0, 0), (0, 0, 1)).to_h())])
    assert set_equal(intermediate_simple(v), expected)
    assert core_simple(v).vertex_list() == [(1, 0, 0)]


def test_disconnected_example():
    v = disconnected_simple()
    M = intermediate_simple(v)
    assert set_equal(M, PolyUnion(3, [(0, VPolytope(3, [(1, 0, 0)]).to_h()), (1, seg((0, 1, 0), (0, 0, 1)).to_h())]))
    assert core_simple(v).is_empty()
    a, b = [c.polytope for c in M.components]
    assert a.intersect(b).is_empty()
    for y in ((0, 1, 0), (0, 0, 1), (0, F(1, 2), F(1, 2))):
        mid = tuple((s + t) / 2 for s, t in zip((1, 0, 0), y))
        assert not M.contains(mid)


def test_unanimity_face_is_core():
    v = unanimity_game(3, 7)
    assert set_equal(intermediate_simple(v), core(v))
    assert set_equal(core_simple(v), simplex_face(7, 3))


def test_antichain_counts():
    # Dedekind numbers minus the two trivial antichains
    assert [sum(1 for _ in enumerate_antichains(n)) for n in (1, 2, 3, 4)] == [1, 4, 18, 166]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_simple_game_formulas_exhaustive(n):
    for s in enumerate_simple_games(n):
        v = s.game()
        M = intermediate(v)
        assert set_equal(intermediate_simple(s), M)
        assert set_equal(core_simple(s), core(v))
        # the core is the intersection of the faces whose union is M
        faces = [c.polytope for c in intermediate_simple(s).components]
        meet = faces[0]
        for f in faces[1:]:
            meet = meet.intersect(f)
        assert set_equal(meet, core(v))
        if all(v[1 << i] == 0 for i in range(n)):
            assert subset(M, imputations(v))


# -- glove games ---------------------------------------------------------------

def test_make_glove_values():
    v = make_glove(1, 1)
    assert v[3] == 1 and v[1] == v[2] == 0
    w = make_glove(2, 2)
    assert w[coalition([1, 3])] == 1 and w[coalition([1, 2])] == 0 and w[15] == 2
    with pytest.raises(GameError):
        make_glove(1, 2)
    with pytest.raises(GameError):
        make_glove(2, 0)


@pytest.mark.parametrize("p,q", [(p, q) for p in range(1, 6) for q in range(1, p + 1) if p + q <= 6])
def test_glove_min_formula(p, q):
    v = make_glove(p, q)
    L = (1 << p) - 1
    for A in range(1 << (p + q)):
        assert v[A] == min(bin(A & L).count("1"), bin(A & ~L).count("1"))


def test_glove_core_examples():
    assert glove_core(2, 1).vertex_list() == [(0, 0, 1)]
    assert set(glove_core(2, 2).vertex_list()) == {(1, 1, 0, 0), (0, 0, 1, 1)}
    assert set(glove_core(1, 1).vertex_list()) == {(1, 0), (0, 1)}


def test_glove_intermediate_examples():
    assert set_equal(
        intermediate_glove(2, 1),
        PolyUnion(3, [(0, seg((0, 0, 1), (1, 0, 0)).to_h()), (1, seg((0, 0, 1), (0, 1, 0)).to_h())]),
    )
    assert set_equal(intermediate_glove(1, 1), glove_core(1, 1))
    three = intermediate_glove(3, 1)
    expected = [seg((0, 0, 0, 1), e).to_h() for e in ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0))]
    assert set_equal(three, PolyUnion(4, list(enumerate(expected))))


@pytest.mark.parametrize("p,q", [(p, q) for p in range(1, 6) for q in range(1, p + 1) if p + q <= 5])
def test_glove_formulas_match_engine(p, q):
    v = make_glove(p, q)
    assert set_equal(glove_core(p, q), core(v))
    assert set_equal(intermediate_glove(p, q), intermediate(v))


@pytest.mark.parametrize("p,q", [(p, q) for p in range(1, 5) for q in range(1, p + 1) if p + q <= 5])
def test_glove_chain_cases(p, q):
    v = make_glove(p, q)
    for chain in enumerate_chains(p + q):
        comp = chain_component(v, chain)
        predicted = glove_chain_prediction(p, q, chain)
        if predicted is None:
            assert comp.is_empty()
            assert INFEASIBLE in glove_chain_cases(p, q, chain)
        else:
            assert set_equal(comp, predicted)


def test_block_cases():
    assert glove_block_case(0, 0, 1, 1) == BALANCED
    assert glove_block_case(1, 0, 1, 2) == INFEASIBLE
    assert glove_block_case(0, 1, 2, 1) == INFEASIBLE
    assert glove_block_case(0, 0, 2, 1) == LEFT_SURPLUS
    assert glove_block_case(1, 1, 2, 1) == LEFT_SURPLUS
    assert glove_block_case(0, 0, 0, 1) == RIGHT_SURPLUS


def test_example_relabeling():
    # one left glove (player 1) and two right gloves (players 2 and 3)
    v, perm, p, q = glove_relabeled([1], [2, 3])
    assert v == glove_example()
    assert (p, q) == (2, 1)
    assert sorted(perm) == [1, 2, 3]
    assert set_equal(intermediate_glove_relabeled([1], [2, 3]), intermediate(glove_example()))


def test_relabeling_errors():
    with pytest.raises(GameError):
        glove_relabeled([1, 2], [2, 3])
    with pytest.raises(GameError):
        glove_relabeled([1], [3])


@pytest.mark.parametrize("left", [[2], [1, 3], [2, 4], [3, 4]])
def test_relabeled_formula_matches_engine(left):
    right = [i for i in range(1, 5) if i not in left]
    v, _, _, _ = glove_relabeled(left, right)
    assert set_equal(intermediate_glove_relabeled(left, right), intermediate(v))


# -- submodular games ----------------------------------------------------------

def test_single_winner_cost_game():
    c = F(5, 2)
    v = Game.from_function(3, lambda A: c * min(bin(A).count("1"), 1))
    M = intermediate_submodular(v)
    assert set(M.vertex_set()) == set(itertools.permutations((c, 0, 0)))
    assert set_equal(M, intermediate(v))


def test_negated_star_is_not_submodular():
    # the star game is not supermodular, so its negation falls outside the shortcut
    with pytest.raises(GameError):
        intermediate_submodular(-star_game())
    M = intermediate(-star_game())
    assert set(M.vertex_set()) == set(itertools.permutations((0, -1, -2)))
    # but M is not finite: chain {1, N} contributes a whole segment
    assert M.contains((0, F(-3, 2), F(-3, 2)))


def test_negated_supermodular_example():
    v = -(unanimity_game(3, 3) + unanimity_game(3, 7).scale(2))
    M = intermediate_submodular(v)
    # players 1 and 2 split the pair's loss by arrival order; the grand loss goes to the last arrival
    assert set(M.vertex_set()) == {(-3, 0, 0), (0, -3, 0), (-1, 0, -2), (0, -1, -2)}
    assert set_equal(M, intermediate(v))


def test_submodular_shortcut_rejects_other_games():
    with pytest.raises(GameError):
        intermediate_submodular(star_game())


@pytest.mark.parametrize("seed", range(6))
def test_submodular_shortcut_random(seed):
    v = random_submodular(3 + seed % 2, seed)
    assert set_equal(intermediate_submodular(v), intermediate(v))
    labels = [c.label for c in intermediate_submodular(v).components]
    assert all(c.polytope.vertex_list() == [marginal_vector(v, l)] for c, l in zip(intermediate_submodular(v).components, labels))
