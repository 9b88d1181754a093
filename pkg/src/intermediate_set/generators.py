"""Seeded random game families used by the test corpora and the CLI."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from .game import Game, additive_game, players, unanimity_game


def _rng(seed_or_rng) -> random.Random:
    if isinstance(seed_or_rng, random.Random):
        return seed_or_rng
    return random.Random(seed_or_rng)


def random_rational(rng: random.Random, lo: int = -10, hi: int = 20, max_den: int = 3) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, max_den))


def random_game(n: int, seed=0, *, lo: int = -10, hi: int = 20, max_den: int = 3) -> Game:
    """Independent rational values on every nonempty coalition."""
    rng = _rng(seed)
    return Game.from_function(n, lambda A: random_rational(rng, lo, hi, max_den) if A else Fraction(0))


def random_additive(n: int, seed=0) -> Game:
    rng = _rng(seed)
    return additive_game([random_rational(rng, -5, 5) for _ in range(n)])


def random_supermodular(n: int, seed=0, *, density: float = 0.5) -> Game:
    """Nonnegative combination of unanimity games on coalitions of size >= 2,
    plus an arbitrary additive part.  Supermodular by construction."""
    rng = _rng(seed)
    v = random_additive(n, rng)
    for T in range(1, 1 << n):
        if len(players(T)) >= 2 and rng.random() < density:
            v = v + unanimity_game(n, T).scale(Fraction(rng.randint(1, 6), rng.randint(1, 2)))
    return v


def random_submodular(n: int, seed=0, *, density: float = 0.5) -> Game:
    return -random_supermodular(n, seed, density=density)


def break_supermodularity(v: Game, seed=0) -> Game:
    """Lower ``v(A | B)`` for a random incomparable pair ``A, B`` until
    ``v(A | B) + v(A & B) < v(A) + v(B)``."""
    if v.n < 2:
        raise ValueError("supermodularity cannot fail with fewer than two players")
    rng = _rng(seed)
    pairs = [
        (A, B)
        for A, B in itertools.combinations(range(1, 1 << v.n), 2)
        if A & B != A and A & B != B
    ]
    A, B = rng.choice(pairs)
    vals = list(v.values)
    vals[A | B] = vals[A] + vals[B] - vals[A & B] - Fraction(rng.randint(1, 4), rng.randint(1, 2))
    return Game(v.n, vals, max_n=v.n)


def with_null_player(n: int, player: int, seed=0) -> Game:
    """Random game in which ``player`` (1-based) contributes nothing."""
    base = random_game(n, seed)
    bit = 1 << (player - 1)
    return Game.from_function(n, lambda A: base[A & ~bit])


def with_dummy_player(n: int, player: int, seed=0) -> Game:
    """Random game in which ``player`` always adds exactly ``v({player})``."""
    rng = _rng(seed)
    base = random_game(n, rng)
    c = random_rational(rng, -5, 5)
    bit = 1 << (player - 1)
    return Game.from_function(n, lambda A: base[A & ~bit] + (c if A & bit else 0))


def random_weakly_superadditive(n: int, seed=0) -> Game:
    """A random monotone zero-normalized game plus a random additive game.

    ``v(A + i) >= v(A) + v({i})`` holds exactly when ``v`` minus its
    singleton worths is monotone, so this reaches every such game.
    """
    rng = _rng(seed)
    vals = [Fraction(0)] * (1 << n)
    for A in sorted(range(1, 1 << n), key=lambda m: bin(m).count("1")):
        below = max((vals[A & ~(1 << i)] for i in range(n) if A >> i & 1), default=Fraction(0))
        grow = len(players(A)) > 1 and rng.random() < 0.7
        vals[A] = below + (random_rational(rng, 0, 6) if grow else 0)
    return Game(n, vals, max_n=n) + random_additive(n, rng)


def outside_weakly_superadditive(n: int, seed=0) -> Game:
    """A random game with ``v({1}) > v(N) - v(N - {1})``, so player 1 has a
    marginal contribution below its stand-alone worth."""
    if n < 2:
        raise ValueError("every one-player game is weakly superadditive")
    rng = _rng(seed)
    base = random_game(n, rng)
    vals = list(base.values)
    N = (1 << n) - 1
    vals[1] = vals[N] - vals[N & ~1] + Fraction(rng.randint(1, 5))
    return Game(n, vals, max_n=n)


__all__ = [
    "break_supermodularity",
    "outside_weakly_superadditive",
    "random_additive",
    "random_game",
    "random_rational",
    "random_submodular",
    "random_supermodular",
    "random_weakly_superadditive",
    "with_dummy_player",
    "with_null_player",
]
