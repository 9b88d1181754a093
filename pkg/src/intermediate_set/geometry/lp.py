"""Exact two-phase simplex over Fractions with Bland's anti-cycling rule."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"

_ZERO = Fraction(0)


@dataclass
class LPResult:
    status: str
    x: tuple[Fraction, ...] | None = None
    value: Fraction | None = None


def _pivot(T, basis, r, c):
    row = T[r]
    p = row[c]
    if p != 1:
        row = T[r] = [a / p for a in row]
    for i, other in enumerate(T):
        if i != r:
            f = other[c]
            if f:
                T[i] = [a - f * b if b else a for a, b in zip(other, row)]
    basis[r] = c


def _iterate(T, basis, ncols):
    """Bland-rule simplex on a tableau whose last row is the reduced-cost row."""
    m = len(T) - 1
    while True:
        cost = T[-1]
        enter = next((j for j in range(ncols) if cost[j] < 0), None)
        if enter is None:
            return OPTIMAL
        best = None
        for i in range(m):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][-1] / a
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            return UNBOUNDED
        _pivot(T, basis, best[1], enter)


def simplex(c: Sequence, A: Sequence[Sequence], b: Sequence) -> LPResult:
    """Minimize ``c.z`` subject to ``A z = b``, ``z >= 0``."""
    nvar = len(c)
    rows = []
    for a, rhs in zip(A, b):
        a = [Fraction(x) for x in a]
        rhs = Fraction(rhs)
        if rhs < 0:
            a, rhs = [-x for x in a], -rhs
        rows.append((a, rhs))
    m = len(rows)
    # phase 1: artificial columns nvar .. nvar+m-1
    T = []
    for i, (a, rhs) in enumerate(rows):
        art = [_ZERO] * m
        art[i] = Fraction(1)
        T.append(a + art + [rhs])
    basis = list(range(nvar, nvar + m))
    cost = [_ZERO] * (nvar + m + 1)
    for row in T:
        for j in range(nvar):
            cost[j] -= row[j]
        cost[-1] -= row[-1]
    T.append(cost)
    _iterate(T, basis, nvar + m)
    if T[-1][-1] != 0:
        return LPResult(INFEASIBLE)
    # drive remaining artificials out of the basis, dropping redundant rows
    i = 0
    while i < len(T) - 1:
        if basis[i] >= nvar:
            col = next((j for j in range(nvar) if T[i][j] != 0), None)
            if col is None:
                del T[i]
                del basis[i]
                continue
            _pivot(T, basis, i, col)
        i += 1
    T = [row[:nvar] + [row[-1]] for row in T[:-1]]
    cvec = [Fraction(x) for x in c]
    cost = cvec + [_ZERO]
    for i, row in enumerate(T):
        cb = cvec[basis[i]]
        if cb:
            cost = [a - cb * r for a, r in zip(cost, row)]
    T.append(cost)
    status = _iterate(T, basis, nvar)
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED)
    z = [_ZERO] * nvar
    for i, j in enumerate(basis):
        z[j] = T[i][-1]
    return LPResult(OPTIMAL, tuple(z), -T[-1][-1])


def solve(
    n: int,
    objective: Sequence | None = None,
    equalities: Sequence = (),
    inequalities: Sequence = (),
    maximize: bool = False,
) -> LPResult:
    """Optimize over free variables ``x`` in R^n.

    ``equalities`` holds ``(row, rhs)`` meaning ``row.x = rhs``;
    ``inequalities`` holds ``(row, rhs)`` meaning ``row.x >= rhs``.
    Without an objective this is a pure feasibility problem.
    """
    # x = u - w with u, w >= 0; one surplus variable per inequality
    k = len(inequalities)
    width = 2 * n + k
    A, b = [], []
    for row, rhs in equalities:
        A.append(list(row) + [-x for x in row] + [0] * k)
        b.append(rhs)
    for s, (row, rhs) in enumerate(inequalities):
        surplus = [0] * k
        surplus[s] = -1
        A.append(list(row) + [-x for x in row] + surplus)
        b.append(rhs)
    if objective is None:
        c = [0] * width
    else:
        sign = -1 if maximize else 1
        c = [sign * x for x in objective] + [-sign * x for x in objective] + [0] * k
    if not A:
        A, b = [[0] * width], [0]
    res = simplex(c, A, b)
    if res.status != OPTIMAL:
        return res
    x = tuple(res.x[j] - res.x[n + j] for j in range(n))
    value = res.value if not maximize else -res.value
    return LPResult(OPTIMAL, x, value)
