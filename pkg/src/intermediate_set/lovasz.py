"""The Lovasz extension of a game and the level-set decomposition behind it."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .game import Game, GameError, as_vector


@dataclass(frozen=True)
class LevelDecomposition:
    """``x = sum_i x[perm[i]] * (chi(levels[i]) - chi(levels[i-1]))``.

    ``perm`` lists 0-based coordinates sorted by decreasing value, ``levels[i]``
    is the mask of coordinates whose value is at least ``x[perm[i]]`` and
    ``coefficients[i] = x[perm[i]]``.
    """

    perm: tuple[int, ...]
    levels: tuple[int, ...]
    coefficients: tuple[Fraction, ...]

    def reassemble(self) -> tuple[Fraction, ...]:
        n = len(self.perm)
        x = [Fraction(0)] * n
        prev = 0
        for coef, level in zip(self.coefficients, self.levels):
            diff = level & ~prev
            for j in range(n):
                if diff >> j & 1:
                    x[j] += coef
            prev = level
        return tuple(x)


def sorting_permutation(x: Sequence) -> tuple[int, ...]:
    """The canonical element of Pi(x): decreasing values, ties by ascending index."""
    return tuple(sorted(range(len(x)), key=lambda i: (-x[i], i)))


def is_sorting_permutation(x: Sequence, perm: Sequence[int]) -> bool:
    return sorted(perm) == list(range(len(x))) and all(
        x[a] >= x[b] for a, b in zip(perm, perm[1:])
    )


def _levels(x: Sequence, perm: Sequence[int]) -> tuple[int, ...]:
    # V_i = {j : x_j >= x_perm(i)}; ties share one level set
    out = []
    n = len(perm)
    i = 0
    while i < n:
        j = i
        mask = out[-1] if out else 0
        while j < n and x[perm[j]] == x[perm[i]]:
            mask |= 1 << perm[j]
            j += 1
        out.extend([mask] * (j - i))
        i = j
    return tuple(out)


def decompose(x: Sequence, perm: Sequence[int] | None = None) -> LevelDecomposition:
    x = as_vector(x)
    if perm is None:
        perm = sorting_permutation(x)
    elif not is_sorting_permutation(x, perm):
        raise GameError(f"{tuple(perm)} does not sort {x} in decreasing order")
    perm = tuple(perm)
    return LevelDecomposition(perm, _levels(x, perm), tuple(x[i] for i in perm))


def lovasz_eval(v: Game, x: Sequence, perm: Sequence[int] | None = None) -> Fraction:
    """Value of the Lovasz extension of ``v`` at ``x``.

    ``perm`` optionally fixes which sorting permutation (0-based) is used; the
    result does not depend on it.
    """
    if len(x) != v.n:
        raise GameError(f"point has {len(x)} coordinates, game has {v.n} players")
    if perm is None:
        perm = sorting_permutation(x)
    elif not is_sorting_permutation(x, perm):
        raise GameError(f"{tuple(perm)} does not sort the point in decreasing order")
    vals = v.values
    total = Fraction(0)
    prev_level = 0
    level = 0
    for idx, i in enumerate(perm):
        # V_i includes every later coordinate tied with x[i]
        level |= 1 << i
        j = idx + 1
        while j < len(perm) and x[perm[j]] == x[i]:
            level |= 1 << perm[j]
            j += 1
        total += x[i] * (vals[level] - vals[prev_level])
        prev_level = level
    return total
