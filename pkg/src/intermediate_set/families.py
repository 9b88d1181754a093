"""Closed-form core and intermediate-set formulas for special game families.

* Simple games: the intermediate set is the union, and the core the
  intersection, of the faces ``Delta_E`` of the standard simplex over the
  minimal winning coalitions ``E``.
* Glove games with left-glove holders ``L = {1..p}`` and right-glove holders
  ``R = {p+1..p+q}``, ``p >= q``.  Other labelings go through
  :func:`glove_relabeled`, which uses anonymity.
* Submodular games: the intermediate set is the finite set of marginal vectors.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .classify import is_simple, is_submodular
from .game import (
    Chain,
    Game,
    GameError,
    all_permutations,
    check_capacity,
    coalition,
    format_coalition,
    marginal_vector,
    players,
)
from .geometry import HPolytope, PolyUnion


def _unit(j: int, n: int, c=1) -> tuple[Fraction, ...]:
    return tuple(Fraction(c) if k == j else Fraction(0) for k in range(n))


def _chi(mask: int, n: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(mask >> k & 1) for k in range(n))


def point_polytope(x: Sequence) -> HPolytope:
    n = len(x)
    return HPolytope(n, [(_unit(j, n), c) for j, c in enumerate(x)], [])


# -- simple games ------------------------------------------------------------

def _minimal(masks: Iterable[int]) -> tuple[int, ...]:
    masks = sorted(set(masks))
    return tuple(A for A in masks if not any(B != A and B & A == B for B in masks))


@dataclass(frozen=True)
class SimpleGame:
    """A simple game given by its winning coalitions (an up-set containing N, not the empty set)."""

    n: int
    winning: frozenset

    @classmethod
    def from_game(cls, v: Game) -> "SimpleGame":
        if not is_simple(v):
            raise GameError("not a simple game: values must be 0/1, monotone, with v(N) = 1")
        return cls(v.n, frozenset(A for A in range(1 << v.n) if v[A] == 1))

    @classmethod
    def from_minimal_winning(cls, n: int, minimal: Iterable) -> "SimpleGame":
        """Build from a family of coalitions (masks or player collections)."""
        masks = []
        for E in minimal:
            mask = E if isinstance(E, int) else coalition(E)
            if mask == 0 or mask >> n:
                raise GameError(f"minimal winning coalitions must be nonempty subsets of 1..{n}")
            masks.append(mask)
        if not masks:
            raise GameError("a simple game needs at least one winning coalition")
        return cls(n, frozenset(A for A in range(1 << n) if any(E & A == E for E in masks)))

    @property
    def minimal_winning(self) -> tuple[int, ...]:
        return _minimal(self.winning)

    def game(self) -> Game:
        return Game.from_function(self.n, lambda A: Fraction(int(A in self.winning)), max_n=self.n)


def parse_minimal_winning(text: str, n: int | None = None) -> tuple[int, list[int]]:
    """``"1,2;1,3"`` -> (n, masks); ``n`` defaults to the largest player named."""
    masks = []
    top = 0
    for part in text.split(";"):
        ids = [int(t) for t in part.split(",") if t.strip()]
        if not ids:
            raise GameError(f"empty coalition in {text!r}")
        top = max(top, *ids)
        masks.append(coalition(ids))
    n = top if n is None else n
    if top > n:
        raise GameError(f"player {top} exceeds n={n}")
    return n, masks


def _simple_view(v) -> SimpleGame:
    return v if isinstance(v, SimpleGame) else SimpleGame.from_game(v)


def minimal_winning(v) -> tuple[int, ...]:
    return _simple_view(v).minimal_winning


def simplex_face(E: int, n: int) -> HPolytope:
    """``Delta_E``: nonnegative on ``E``, zero off ``E``, summing to one."""
    eqs = [(_chi(E, n), 1)] + [(_unit(j, n), 0) for j in range(n) if not E >> j & 1]
    ineqs = [(_unit(j, n), 0) for j in range(n) if E >> j & 1]
    return HPolytope(n, eqs, ineqs)


def intermediate_simple(v) -> PolyUnion:
    """Union of the faces ``Delta_E`` over minimal winning ``E``, labelled by ``E``."""
    s = _simple_view(v)
    return PolyUnion(s.n, [(E, simplex_face(E, s.n)) for E in s.minimal_winning])


def core_simple(v) -> HPolytope:
    """Intersection of the faces ``Delta_E`` over minimal winning ``E``."""
    s = _simple_view(v)
    faces = [simplex_face(E, s.n) for E in s.minimal_winning]
    out = faces[0]
    for F in faces[1:]:
        out = out.intersect(F)
    return out


def enumerate_antichains(n: int) -> Iterator[tuple[int, ...]]:
    """Nonempty antichains of nonempty coalitions, i.e. the minimal winning
    families of all simple games on ``n`` players."""
    masks = list(range(1, 1 << n))

    def rec(start, chosen):
        if chosen:
            yield tuple(chosen)
        for k in range(start, len(masks)):
            A = masks[k]
            if all(A & B != A and A & B != B for B in chosen):
                chosen.append(A)
                yield from rec(k + 1, chosen)
                chosen.pop()

    return rec(0, [])


def enumerate_simple_games(n: int) -> Iterator[SimpleGame]:
    for family in enumerate_antichains(n):
        yield SimpleGame.from_minimal_winning(n, family)


# -- glove games -------------------------------------------------------------

def make_glove(p: int, q: int, *, max_n: int = 8) -> Game:
    """``v(A) = min(|A & L|, |A & R|)`` with ``L = {1..p}``, ``R = {p+1..p+q}``."""
    if q < 1:
        raise GameError("glove games need at least one glove of each kind")
    if p < q:
        raise GameError(f"p={p} < q={q}: relabel so that left gloves are the majority (see glove_relabeled)")
    n = p + q
    check_capacity(n, max_n)
    L = (1 << p) - 1
    R = ((1 << n) - 1) & ~L
    return Game.from_function(
        n, lambda A: Fraction(min(bin(A & L).count("1"), bin(A & R).count("1"))), max_n=max_n
    )


def glove_core(p: int, q: int) -> HPolytope:
    n = p + q
    if p < q:
        raise GameError(f"p={p} < q={q}")
    left = (1 << p) - 1
    right = ((1 << n) - 1) & ~left
    if p > q:
        return point_polytope(_chi(right, n))
    # the segment between chi_L and chi_R: x_l = t, x_r = 1 - t, 0 <= t <= 1
    eqs = [(tuple(Fraction(int(k in (0, p + j))) for k in range(n)), 1) for j in range(q)]
    eqs += [(tuple(Fraction(int(k == 0)) - Fraction(int(k == j)) for k in range(n)), 0) for j in range(1, p)]
    ineqs = [(_unit(0, n), 0), (_unit(0, n, -1), -1)]
    return HPolytope(n, eqs, ineqs)


def glove_matching_polytope(p: int, q: int, matched: Sequence[int], rho: Sequence[int]) -> HPolytope:
    """``x_l + x_rho(l) = 1`` and ``0 <= x_l <= 1`` on matched left players,
    ``x_l = 0`` on unmatched ones (players 1-based)."""
    n = p + q
    eqs, ineqs = [], []
    for l, r in zip(matched, rho):
        row = [Fraction(0)] * n
        row[l - 1] = row[r - 1] = Fraction(1)
        eqs.append((tuple(row), 1))
        ineqs.append((_unit(l - 1, n), 0))
        ineqs.append((_unit(l - 1, n, -1), -1))
    for l in range(1, p + 1):
        if l not in matched:
            eqs.append((_unit(l - 1, n), 0))
    return HPolytope(n, eqs, ineqs)


def intermediate_glove(p: int, q: int) -> PolyUnion:
    """Union over q-subsets ``Lt`` of ``L`` and bijections ``rho: Lt -> R``.

    Labels are tuples of matched pairs ``((l, rho(l)), ...)``; different
    labels may give the same polytope and are all kept.
    """
    if p < q:
        raise GameError(f"p={p} < q={q}")
    right = list(range(p + 1, p + q + 1))
    comps = []
    for matched in itertools.combinations(range(1, p + 1), q):
        for rho in itertools.permutations(right):
            label = tuple(zip(matched, rho))
            comps.append((label, glove_matching_polytope(p, q, matched, rho)))
    return PolyUnion(p + q, comps)


BALANCED = "balanced"
INFEASIBLE = "infeasible"
LEFT_SURPLUS = "left_surplus"
RIGHT_SURPLUS = "right_surplus"


def glove_block_case(p_prev: int, q_prev: int, p_cur: int, q_cur: int) -> str:
    """Which case of the per-block glove analysis applies, from the glove counts
    of ``C_{i-1}`` and ``C_i``.

    ``left_surplus``: left holders in the block get 0, right holders 1.
    ``right_surplus``: the mirror image.  ``balanced``: the segment between the
    block's left and right incidence vectors.
    """
    if p_prev == q_prev and p_cur == q_cur:
        return BALANCED
    if (p_prev > q_prev and p_cur < q_cur) or (p_prev < q_prev and p_cur > q_cur):
        return INFEASIBLE
    if p_prev >= q_prev and p_cur >= q_cur:
        return LEFT_SURPLUS
    return RIGHT_SURPLUS


def glove_chain_cases(p: int, q: int, chain: Chain) -> list[str]:
    left = (1 << p) - 1
    right = ((1 << (p + q)) - 1) & ~left
    out = []
    pp = qq = 0
    for c in chain.coalitions:
        pc, qc = bin(c & left).count("1"), bin(c & right).count("1")
        out.append(glove_block_case(pp, qq, pc, qc))
        pp, qq = pc, qc
    return out


def glove_chain_prediction(p: int, q: int, chain: Chain) -> HPolytope | None:
    """The chain component predicted block by block, or None when empty."""
    n = p + q
    left = (1 << p) - 1
    eqs, ineqs = [], []
    for case, (_, block) in zip(glove_chain_cases(p, q, chain), chain.steps()):
        if case == INFEASIBLE:
            return None
        ls = [j for j in range(n) if block >> j & 1 and left >> j & 1]
        rs = [j for j in range(n) if block >> j & 1 and not left >> j & 1]
        if case == BALANCED:
            l0, r0 = ls[0], rs[0]
            for j in ls[1:]:
                eqs.append((tuple(Fraction(int(k == j) - int(k == l0)) for k in range(n)), 0))
            for j in rs[1:]:
                eqs.append((tuple(Fraction(int(k == j) - int(k == r0)) for k in range(n)), 0))
            eqs.append((tuple(Fraction(int(k in (l0, r0))) for k in range(n)), 1))
            ineqs.append((_unit(l0, n), 0))
            ineqs.append((_unit(r0, n), 0))
        else:
            lv, rv = (0, 1) if case == LEFT_SURPLUS else (1, 0)
            eqs.extend((_unit(j, n), lv) for j in ls)
            eqs.extend((_unit(j, n), rv) for j in rs)
    return HPolytope(n, eqs, ineqs)


def glove_relabeled(left: Iterable[int], right: Iterable[int], n: int | None = None):
    """Glove game with arbitrary left/right holder sets (1-based players).

    Returns ``(game, perm, p, q)`` where ``perm`` maps each original player to
    its standard label (majority side first).  The standard-label formulas
    carry back to the original players through ``permute`` with the inverse.
    """
    left, right = sorted(set(left)), sorted(set(right))
    if set(left) & set(right):
        raise GameError("a player cannot hold both gloves")
    if n is None:
        n = len(left) + len(right)
    if sorted(left + right) != list(range(1, n + 1)):
        raise GameError("left and right holders must partition the players 1..n")
    if len(left) < len(right):
        left, right = right, left
    perm = [0] * n
    for k, i in enumerate(left + right):
        perm[i - 1] = k + 1
    p, q = len(left), len(right)
    inverse = [0] * n
    for i, j in enumerate(perm):
        inverse[j - 1] = i + 1
    return make_glove(p, q).permute(inverse), tuple(perm), p, q


def intermediate_glove_relabeled(left: Iterable[int], right: Iterable[int]) -> PolyUnion:
    """The glove formula for arbitrary holder sets, in the original labels."""
    _, perm, p, q = glove_relabeled(left, right)
    inverse = [0] * len(perm)
    for i, j in enumerate(perm):
        inverse[j - 1] = i + 1
    return intermediate_glove(p, q).map(lambda P: P.permute(inverse))


# -- submodular games --------------------------------------------------------

def intermediate_submodular(v: Game) -> PolyUnion:
    """The marginal vectors as one-point components labelled by arrival order."""
    if not is_submodular(v):
        raise GameError("the game is not submodular")
    return PolyUnion(v.n, [(perm, point_polytope(marginal_vector(v, perm))) for perm in all_permutations(v.n)])


def format_family(masks: Iterable[int]) -> str:
    return ";".join(format_coalition(E) for E in masks)


__all__ = [
    "BALANCED",
    "INFEASIBLE",
    "LEFT_SURPLUS",
    "RIGHT_SURPLUS",
    "SimpleGame",
    "core_simple",
    "enumerate_antichains",
    "enumerate_simple_games",
    "format_family",
    "glove_block_case",
    "glove_chain_cases",
    "glove_chain_prediction",
    "glove_core",
    "glove_matching_polytope",
    "glove_relabeled",
    "intermediate_glove",
    "intermediate_glove_relabeled",
    "intermediate_simple",
    "intermediate_submodular",
    "make_glove",
    "minimal_winning",
    "parse_minimal_winning",
    "point_polytope",
    "simplex_face",
]
