"""Brute-force reference computations, deliberately independent of the package
internals they are compared with."""

from __future__ import annotations

import itertools
from fractions import Fraction


def ordered_partitions(n):
    """All ordered set partitions of {0..n-1} as tuples of frozensets, via
    surjective block assignments."""
    out = []
    for k in range(1, n + 1):
        for assign in itertools.product(range(k), repeat=n):
            if set(assign) != set(range(k)):
                continue
            out.append(tuple(frozenset(j for j in range(n) if assign[j] == b) for b in range(k)))
    return out


def ordered_bell_recurrence(n):
    # a(n) = sum_{k>=1} C(n,k) a(n-k)
    from math import comb

    a = [1]
    for m in range(1, n + 1):
        a.append(sum(comb(m, k) * a[m - k] for k in range(1, m + 1)))
    return a[n]


def mobius(values, n):
    """Mobius (Harsanyi) coefficients of a set function given as a list by mask."""
    m = [Fraction(0)] * (1 << n)
    for T in range(1 << n):
        total = Fraction(0)
        S = T
        while True:
            sign = -1 if (bin(T).count("1") - bin(S).count("1")) % 2 else 1
            total += sign * values[S]
            if S == 0:
                break
            S = (S - 1) & T
        m[T] = total
    return m


def lovasz_by_mobius(values, n, x):
    """Extension value as sum over T of m(T) * min_{i in T} x_i."""
    m = mobius(values, n)
    total = Fraction(0)
    for T in range(1, 1 << n):
        if m[T]:
            total += m[T] * min(x[i] for i in range(n) if T >> i & 1)
    return total


def solve(A, b):
    """Unique solution of a square rational system, or None if singular."""
    n = len(A)
    M = [list(map(Fraction, row)) + [Fraction(rhs)] for row, rhs in zip(A, b)]
    for c in range(n):
        piv = next((r for r in range(c, n) if M[r][c] != 0), None)
        if piv is None:
            return None
        M[c], M[piv] = M[piv], M[c]
        p = M[c][c]
        M[c] = [a / p for a in M[c]]
        for r in range(n):
            if r != c and M[r][c] != 0:
                f = M[r][c]
                M[r] = [a - f * bb for a, bb in zip(M[r], M[c])]
    return tuple(M[r][n] for r in range(n))


def basic_vertices(n, equalities, inequalities):
    """Vertices by enumerating every square subsystem of tight constraints."""
    eqs = [(tuple(map(Fraction, r)), Fraction(b)) for r, b in equalities]
    ineqs = [(tuple(map(Fraction, r)), Fraction(b)) for r, b in inequalities]

    def feasible(x):
        return all(sum(a * c for a, c in zip(r, x)) == b for r, b in eqs) and all(
            sum(a * c for a, c in zip(r, x)) >= b for r, b in ineqs
        )

    rows = eqs + ineqs
    found = set()
    for combo in itertools.combinations(range(len(rows)), n):
        A = [rows[i][0] for i in combo]
        b = [rows[i][1] for i in combo]
        x = solve(A, b)
        if x is not None and feasible(x):
            found.add(x)
    return found


def in_hull_2d_grid(ineqs, den=4, bound=4):
    """Some grid point with denominators up to ``den`` satisfying all rows, or None."""
    grid = sorted({Fraction(a, d) for d in range(1, den + 1) for a in range(-bound * d, bound * d + 1)})
    for x in grid:
        for y in grid:
            if all(r[0] * x + r[1] * y >= b for r, b in ineqs):
                return (x, y)
    return None


def marginal_by_definition(values, n, perm):
    """x_i = v(predecessors of i including i) - v(predecessors of i), perm 1-based."""
    x = [Fraction(0)] * n
    for pos, i in enumerate(perm):
        before = sum(1 << (j - 1) for j in perm[:pos])
        x[i - 1] = values[before | 1 << (i - 1)] - values[before]
    return tuple(x)
