"""Superdifferentials of the Lovasz extension computed from its values alone.

Nothing here looks at chain systems or marginal games.  Every set is built by
evaluating the extension near a point and turning difference quotients into
linear inequalities, so the results can be checked against
:mod:`intermediate_set.solutions`.

Near a point whose distinct coordinate values are separated by gaps, the
extension is positively homogeneous in the displacement and splits into a sum
of one Lovasz extension per level block (the level blocks of the point form a
chain).  The Frechet superdifferential is therefore cut out by the probes
``+chi_B`` for ``B`` inside a level block together with ``-chi`` of each block.
The ``"full"`` direction set probes ``+-chi_B`` for every coalition instead;
the extra rows are implied and only serve as a cross-check.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .game import (
    DEFAULT_MAX_N,
    Chain,
    Game,
    all_permutations,
    as_vector,
    check_capacity,
    enumerate_chains,
    submasks,
)
from .geometry import HPolytope, PolyUnion, VPolytope, minkowski_member, set_equal, subset
from .lovasz import lovasz_eval

LOCAL = "local"
FULL = "full"
ZERO = "zero"
GRAND = "grand"


@dataclass(frozen=True)
class FanPoint:
    """A point whose level blocks are exactly the blocks of ``chain``.

    Block ``i`` of ``k`` gets the value ``k - i + 1``, so its sorting
    permutations are the orders that list the blocks one after another.
    """

    chain: Chain

    @property
    def point(self) -> tuple[Fraction, ...]:
        blocks = self.chain.blocks
        k = len(blocks)
        x = [Fraction(0)] * self.chain.n
        for i, block in enumerate(blocks):
            for j in range(self.chain.n):
                if block >> j & 1:
                    x[j] = Fraction(k - i)
        return tuple(x)


def level_blocks(x: Sequence) -> list[int]:
    """Masks of equal-value coordinates, highest value first."""
    groups: dict = {}
    for j, c in enumerate(x):
        groups[c] = groups.get(c, 0) | 1 << j
    return [groups[c] for c in sorted(groups, reverse=True)]


def probe_step(x: Sequence) -> Fraction:
    """A step strictly below half of the smallest gap between distinct values."""
    vals = sorted(set(x))
    if len(vals) < 2:
        return Fraction(1)
    return min(b - a for a, b in zip(vals, vals[1:])) / 4


def _chi(mask, n, sign=1):
    return tuple(Fraction(sign) if mask >> j & 1 else Fraction(0) for j in range(n))


def probe_directions(x: Sequence, directions: str = LOCAL) -> list[tuple[Fraction, ...]]:
    n = len(x)
    if directions == FULL:
        out = []
        for B in range(1, 1 << n):
            out.append(_chi(B, n))
            out.append(_chi(B, n, -1))
        return out
    if directions != LOCAL:
        raise ValueError(f"unknown direction set {directions!r}")
    out = []
    for block in level_blocks(x):
        out.extend(_chi(B, n) for B in submasks(block))
        out.append(_chi(block, n, -1))
    return out


def _quotient(v, x, base, d, eps):
    y = tuple(a + eps * b for a, b in zip(x, d))
    return (lovasz_eval(v, y) - base) / eps


def frechet_superdiff(v: Game, xbar: Sequence, *, directions: str = LOCAL) -> HPolytope:
    """Regular supergradients of the extension at ``xbar``.

    Each probe direction ``d`` contributes ``<x*, d> >= (f(xbar + eps d) - f(xbar)) / eps``.
    A probe pair ``+-d`` with matching bounds is stored as one equality.
    """
    x = as_vector(xbar)
    eps = probe_step(x)
    base = lovasz_eval(v, x)
    rows = {}
    for d in probe_directions(x, directions):
        rows[d] = _quotient(v, x, base, d, eps)
    eqs, ineqs = [], []
    for d, q in rows.items():
        neg = tuple(-c for c in d)
        if neg in rows and rows[neg] == -q:
            if d > neg:
                eqs.append((d, q))
        else:
            ineqs.append((d, q))
    return HPolytope(v.n, eqs, ineqs)


def validate_frechet(
    v: Game,
    xbar: Sequence,
    polytope: HPolytope,
    *,
    samples: int = 1000,
    seed: int = 0,
) -> tuple[Fraction, ...] | None:
    """Check the vertices of ``polytope`` against random rational directions.

    Returns a violating direction, or None.  Since the defining condition is
    linear in the supergradient, checking vertices covers the whole polytope.
    """
    x = as_vector(xbar)
    eps = probe_step(x)
    base = lovasz_eval(v, x)
    verts = polytope.vertex_list()
    rng = random.Random(seed)
    for _ in range(samples):
        d = tuple(Fraction(rng.randint(-8, 8), rng.randint(1, 4)) for _ in range(v.n))
        if not any(d):
            continue
        scale = max(abs(c) for c in d)
        q = _quotient(v, x, base, d, eps / scale)
        for p in verts:
            if sum(a * b for a, b in zip(p, d)) < q:
                return d
    return None


def _offset(at: str, n: int):
    if at == GRAND:
        return (Fraction(1),) * n
    if at == ZERO:
        return (Fraction(0),) * n
    raise ValueError(f"unknown base point {at!r}; use {ZERO!r} or {GRAND!r}")


def limiting_superdiff(
    v: Game,
    at: str = GRAND,
    *,
    directions: str = LOCAL,
    max_n: int = DEFAULT_MAX_N,
) -> PolyUnion:
    """Union over chains of the Frechet superdifferential at one point of each
    cone around the base point, labelled by chain."""
    check_capacity(v.n, max_n)
    off = _offset(at, v.n)
    comps = []
    for chain in enumerate_chains(v.n, max_n=max_n):
        xbar = tuple(a + b for a, b in zip(FanPoint(chain).point, off))
        comps.append((chain, frechet_superdiff(v, xbar, directions=directions)))
    return PolyUnion(v.n, comps)


def gradient(v: Game, x: Sequence) -> tuple[Fraction, ...]:
    """Gradient of the extension at a point with pairwise distinct coordinates."""
    x = as_vector(x)
    if len(set(x)) != len(x):
        raise ValueError("the extension need not be differentiable at a point with ties")
    eps = probe_step(x)
    base = lovasz_eval(v, x)
    return tuple(_quotient(v, x, base, _chi(1 << j, v.n), eps) for j in range(v.n))


def clarke_superdiff(v: Game) -> VPolytope:
    """Convex hull of the gradients on every region of differentiability."""
    grads = []
    for perm in all_permutations(v.n):
        grads.append(gradient(v, FanPoint(Chain.from_permutation(perm)).point))
    return VPolytope(v.n, grads)


def _translate_union(union: PolyUnion, z) -> PolyUnion:
    return union.map(lambda P: P.translate(z))


def sum_rule_check(v1: Game, v2: Game, *, at: str = ZERO) -> dict:
    """Check that the limiting superdifferential of the sum lies in the sum of
    the limiting superdifferentials, and that equality holds when ``v2`` is
    additive (its extension is linear)."""
    if v1.n != v2.n:
        raise ValueError("games must have the same number of players")
    both = limiting_superdiff(v1 + v2, at)
    s1 = limiting_superdiff(v1, at)
    s2 = limiting_superdiff(v2, at)
    report = {"inclusion": True, "witness": None, "additive": _is_additive(v2), "equality": None}
    for comp in both.nonempty():
        for p in comp.polytope.vertex_list():
            if not minkowski_member(p, s1, s2):
                report["inclusion"] = False
                report["witness"] = p
                break
        if not report["inclusion"]:
            break
    if report["additive"]:
        z = tuple(v2[1 << i] for i in range(v2.n))
        report["equality"] = set_equal(both, _translate_union(s1, z))
    return report


def _is_additive(v: Game) -> bool:
    singles = [v[1 << i] for i in range(v.n)]
    return all(v[A] == sum((s for i, s in enumerate(singles) if A >> i & 1), Fraction(0)) for A in range(1 << v.n))


def _maximal(comps):
    # drop components strictly inside another, keep the first of equal ones
    keep = []
    for i, c in enumerate(comps):
        inside = False
        for j, d in enumerate(comps):
            if i != j and subset(c.polytope, d.polytope):
                if not subset(d.polytope, c.polytope) or j < i:
                    inside = True
                    break
        if not inside:
            keep.append(c)
    return keep


def intersection_query(v: Game, labels=None, *, at: str = GRAND) -> tuple[HPolytope, bool]:
    """Intersect selected nonempty limiting components and compare with the
    Frechet superdifferential at the base point (the core).

    By default the components maximal under inclusion are used; the others
    are single marginal vectors and the like, which would make the
    intersection trivially small.  This is an experiment; no general claim is
    attached to the answer.
    """
    union = limiting_superdiff(v, at)
    comps = union.nonempty()
    comps = _maximal(comps) if labels is None else [c for c in comps if c.label in labels]
    if not comps:
        raise ValueError("no nonempty component selected")
    inter = comps[0].polytope
    for c in comps[1:]:
        inter = inter.intersect(c.polytope)
    frechet = frechet_superdiff(v, _offset(at, v.n))
    return inter, set_equal(inter, frechet)


__all__ = [
    "FULL",
    "FanPoint",
    "GRAND",
    "LOCAL",
    "ZERO",
    "clarke_superdiff",
    "frechet_superdiff",
    "gradient",
    "intersection_query",
    "level_blocks",
    "limiting_superdiff",
    "probe_directions",
    "probe_step",
    "sum_rule_check",
    "validate_frechet",
]
