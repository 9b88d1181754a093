"""Core, imputations, Weber set and the intermediate set of a TU game.

The intermediate set is assembled from one convex component per coalitional
chain, either from the chain's own system of block equalities and block
sub-coalition inequalities, or as the core of the chain's marginal game.  Both
routes give the same components.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .game import (
    DEFAULT_MAX_N,
    Chain,
    Game,
    all_permutations,
    check_capacity,
    enumerate_chains,
    incidence_vector,
    marginal_vector,
    submasks,
)
from .geometry import Component, HPolytope, PolyUnion, VPolytope, set_equal, subset

CHAINS = "chains"
MARGINAL_CORES = "marginal_cores"


class VerificationError(RuntimeError):
    """Two independent routes to the same set disagreed."""


def _chi(mask: int, n: int):
    return incidence_vector(mask, n)


def core(v: Game) -> HPolytope:
    n, N = v.n, v.grand
    return HPolytope(
        n,
        [(_chi(N, n), v[N])],
        [(_chi(A, n), v[A]) for A in range(1, N)],
    )


def imputations(v: Game) -> HPolytope:
    n, N = v.n, v.grand
    return HPolytope(
        n,
        [(_chi(N, n), v[N])],
        [(_chi(1 << i, n), v[1 << i]) for i in range(n)],
    )


def marginal_vectors(v: Game) -> list[tuple[Fraction, ...]]:
    return [marginal_vector(v, perm) for perm in all_permutations(v.n)]


def weber(v: Game) -> VPolytope:
    return VPolytope(v.n, marginal_vectors(v))


def chain_component(v: Game, chain: Chain) -> HPolytope:
    """Payoffs giving each block its marginal worth that no sub-coalition of a
    block can improve upon."""
    n = v.n
    eqs, ineqs = [], []
    for prev, block in chain.steps():
        base = v[prev]
        eqs.append((_chi(block, n), v[prev | block] - base))
        for B in submasks(block):
            if B != block:
                ineqs.append((_chi(B, n), v[prev | B] - base))
    return HPolytope(n, eqs, ineqs)


def marginal_game(v: Game, chain: Chain) -> Game:
    """``v^H(B) = sum_i [v(C_{i-1} | (B & block_i)) - v(C_{i-1})]``."""
    steps = list(chain.steps())
    vals = v.values

    def value(B):
        return sum((vals[prev | (B & block)] - vals[prev] for prev, block in steps), Fraction(0))

    return Game.from_function(v.n, value, max_n=v.n)


def intermediate(
    v: Game,
    method: str = CHAINS,
    *,
    verify: bool = False,
    max_n: int = DEFAULT_MAX_N,
) -> PolyUnion:
    """Union over all chains of the chain components, labelled by chain.

    With ``verify`` the other route is computed as well and the two unions must
    be equal as point sets; a mismatch raises :class:`VerificationError`.
    """
    check_capacity(v.n, max_n)
    if method == CHAINS:
        build = chain_component
    elif method == MARGINAL_CORES:
        build = lambda game, chain: core(marginal_game(game, chain))  # noqa: E731
    else:
        raise ValueError(f"unknown method {method!r}; use {CHAINS!r} or {MARGINAL_CORES!r}")
    result = PolyUnion(v.n, [(chain, build(v, chain)) for chain in enumerate_chains(v.n, max_n=max_n)])
    if verify:
        other = intermediate(v, MARGINAL_CORES if method == CHAINS else CHAINS, max_n=max_n)
        if not set_equal(result, other):
            raise VerificationError("chain components and marginal-game cores disagree")
    return result


def minimal_components(union: PolyUnion) -> PolyUnion:
    """Drop components contained in another component (first copy of equal ones kept).

    A presentation filter only; the represented set is unchanged.
    """
    comps = union.nonempty()
    keep = []
    for i, c in enumerate(comps):
        redundant = False
        for j, d in enumerate(comps):
            if i == j or not subset(c.polytope, d.polytope):
                continue
            if not subset(d.polytope, c.polytope) or j < i:
                redundant = True
                break
        if not redundant:
            keep.append(c)
    return PolyUnion(union.n, keep)


@dataclass
class SolutionReport:
    core: HPolytope
    weber: VPolytope
    intermediate: PolyUnion
    imputations: HPolytope
    empty_chain_labels: list


def solve(v: Game, *, method: str = CHAINS, verify: bool = False, max_n: int = DEFAULT_MAX_N) -> SolutionReport:
    m = intermediate(v, method, verify=verify, max_n=max_n)
    return SolutionReport(core(v), weber(v), m, imputations(v), m.empty_labels())


def component_map(union: PolyUnion) -> dict:
    """Chain label -> component, for unions produced by :func:`intermediate`."""
    return {c.label: c for c in union.components}


__all__ = [
    "CHAINS",
    "MARGINAL_CORES",
    "Component",
    "SolutionReport",
    "VerificationError",
    "chain_component",
    "component_map",
    "core",
    "imputations",
    "intermediate",
    "marginal_game",
    "marginal_vectors",
    "minimal_components",
    "solve",
    "weber",
]
