"""Small exact linear-algebra helpers over Fraction and int."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence


def rref(rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]):
    """Reduced row echelon form of ``[rows | rhs]``.

    Returns ``(pivots, R, e, consistent)`` where ``R[k]`` / ``e[k]`` is the row
    whose leading 1 sits in column ``pivots[k]``.
    """
    m = [list(r) + [b] for r, b in zip(rows, rhs)]
    ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][col]
        if p != 1:
            m[r] = [x / p for x in m[r]]
        row_r = m[r]
        for i in range(len(m)):
            if i != r:
                f = m[i][col]
                if f:
                    m[i] = [a - f * b for a, b in zip(m[i], row_r)]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    consistent = all(row[-1] == 0 for row in m[r:])
    return pivots, [row[:-1] for row in m[:r]], [row[-1] for row in m[:r]], consistent


def int_rank(rows: Sequence[Sequence[int]]) -> int:
    return len(rref([[Fraction(x) for x in r] for r in rows], [Fraction(0)] * len(rows))[0]) if rows else 0


def primitive(vec: Sequence[int]) -> tuple[int, ...]:
    g = 0
    for x in vec:
        g = gcd(g, x)
    if g <= 1:
        return tuple(vec)
    return tuple(x // g for x in vec)


def to_int_row(vec: Sequence[Fraction]) -> tuple[int, ...]:
    """Positive integer multiple of a rational vector, made primitive."""
    den = 1
    for x in vec:
        den = lcm(den, x.denominator)
    return primitive([x.numerator * (den // x.denominator) for x in vec])


def solve_square(rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]):
    """Unique solution of a square system, or None if singular."""
    pivots, R, e, ok = rref(rows, rhs)
    if len(pivots) < len(rows[0]) or not ok:
        return None
    x = [Fraction(0)] * len(rows[0])
    for p, val in zip(pivots, e):
        x[p] = val
    return x


def dot(a: Sequence, b: Sequence):
    return sum(x * y for x, y in zip(a, b))
