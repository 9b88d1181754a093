"""Structural predicates on games and executable solution-concept properties.

The property suite is a falsification harness: each property is checked on
the given game instances and reported as pass or fail, with a witness when it
fails.  A pass certifies those instances only.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .game import Game, additive_game, format_rational, players, submasks
from .geometry import (
    PolyUnion,
    VPolytope,
    convex_hull,
    minkowski_member,
    set_equal,
)
from . import solutions

CORE = "core"
INTERMEDIATE = "intermediate"
WEBER = "weber"
SOLUTIONS = (CORE, INTERMEDIATE, WEBER)

PROPERTIES = ("NE", "CON", "PO", "IR", "SUPA", "SUBA", "AN", "ETP", "RE", "COV", "NP", "DUM")


@dataclass
class GameClassification:
    supermodular: bool
    submodular: bool
    superadditive: bool
    weakly_superadditive: bool
    additive: bool
    monotone: bool
    simple: bool
    zero_normalized: bool
    null_players: int
    dummy_players: int
    substitute_pairs: list = field(default_factory=list)
    reasonable_bounds: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "supermodular": self.supermodular,
            "submodular": self.submodular,
            "superadditive": self.superadditive,
            "weakly_superadditive": self.weakly_superadditive,
            "additive": self.additive,
            "monotone": self.monotone,
            "simple": self.simple,
            "zero_normalized": self.zero_normalized,
            "null_players": list(players(self.null_players)),
            "dummy_players": list(players(self.dummy_players)),
            "substitute_pairs": [list(p) for p in self.substitute_pairs],
            "reasonable_bounds": [[format_rational(a), format_rational(b)] for a, b in self.reasonable_bounds],
        }


# -- predicates --------------------------------------------------------------

def is_supermodular(v: Game) -> bool:
    vals, size = v.values, 1 << v.n
    return all(vals[A | B] + vals[A & B] >= vals[A] + vals[B] for A in range(size) for B in range(A + 1, size))


def is_submodular(v: Game) -> bool:
    return is_supermodular(-v)


def is_superadditive(v: Game) -> bool:
    vals = v.values
    N = v.grand
    for A in range(1, N + 1):
        rest = N & ~A
        for B in submasks(rest):
            if vals[A | B] < vals[A] + vals[B]:
                return False
    return True


def weakly_superadditive_violation(v: Game):
    """``(A, i)`` with ``v(A + i) < v(A) + v({i})``, or None."""
    vals = v.values
    for A in range(1 << v.n):
        for i in range(v.n):
            bit = 1 << i
            if not A & bit and vals[A | bit] < vals[A] + vals[bit]:
                return A, i + 1
    return None


def is_weakly_superadditive(v: Game) -> bool:
    return weakly_superadditive_violation(v) is None


def is_additive(v: Game) -> bool:
    w = additive_game([v[1 << i] for i in range(v.n)])
    return w.values == v.values


def is_monotone(v: Game) -> bool:
    vals = v.values
    return all(vals[A | 1 << i] >= vals[A] for A in range(1 << v.n) for i in range(v.n))


def is_simple(v: Game) -> bool:
    return v[v.grand] == 1 and all(x in (0, 1) for x in v.values) and is_monotone(v)


def is_zero_normalized(v: Game) -> bool:
    return all(v[1 << i] == 0 for i in range(v.n))


def null_players(v: Game) -> int:
    vals = v.values
    mask = 0
    for i in range(v.n):
        bit = 1 << i
        if all(vals[A | bit] == vals[A] for A in range(1 << v.n)):
            mask |= bit
    return mask


def dummy_players(v: Game) -> int:
    vals = v.values
    mask = 0
    for i in range(v.n):
        bit = 1 << i
        if all(vals[A | bit] == vals[A] + vals[bit] for A in range(1 << v.n) if not A & bit):
            mask |= bit
    return mask


def substitute_pairs(v: Game) -> list[tuple[int, int]]:
    """Pairs ``(i, j)``, 1-based, with ``v(A + i) = v(A + j)`` for all ``A`` avoiding both."""
    vals = v.values
    out = []
    for i, j in itertools.combinations(range(v.n), 2):
        bi, bj = 1 << i, 1 << j
        rest = v.grand & ~(bi | bj)
        if all(vals[A | bi] == vals[A | bj] for A in itertools.chain([0], submasks(rest))):
            out.append((i + 1, j + 1))
    return out


def reasonable_bounds(v: Game) -> list[tuple[Fraction, Fraction]]:
    """Smallest and largest marginal contribution of each player."""
    vals = v.values
    out = []
    for i in range(v.n):
        bit = 1 << i
        margins = [vals[A | bit] - vals[A] for A in range(1 << v.n) if not A & bit]
        out.append((min(margins), max(margins)))
    return out


def classify(v: Game) -> GameClassification:
    return GameClassification(
        supermodular=is_supermodular(v),
        submodular=is_submodular(v),
        superadditive=is_superadditive(v),
        weakly_superadditive=is_weakly_superadditive(v),
        additive=is_additive(v),
        monotone=is_monotone(v),
        simple=is_simple(v),
        zero_normalized=is_zero_normalized(v),
        null_players=null_players(v),
        dummy_players=dummy_players(v),
        substitute_pairs=substitute_pairs(v),
        reasonable_bounds=reasonable_bounds(v),
    )


# -- property suite ----------------------------------------------------------

def solution_set(v: Game, name: str):
    if name == CORE:
        return solutions.core(v)
    if name == INTERMEDIATE:
        return solutions.intermediate(v)
    if name == WEBER:
        return solutions.weber(v)
    raise ValueError(f"unknown solution {name!r}; choose one of {', '.join(SOLUTIONS)}")


def solution_vertices(S) -> list[tuple[Fraction, ...]]:
    if isinstance(S, PolyUnion):
        return S.vertex_set()
    if isinstance(S, VPolytope):
        return list(S.points)
    return S.vertex_list()


def _transform(S, fn):
    return S.map(fn) if isinstance(S, PolyUnion) else fn(S)


def _fmt(x):
    if isinstance(x, Fraction):
        return format_rational(x)
    if isinstance(x, (tuple, list)):
        return [_fmt(c) for c in x]
    if isinstance(x, dict):
        return {k: _fmt(c) for k, c in x.items()}
    return x


def _result(witness=None, **extra) -> dict:
    out = {"status": "pass" if witness is None else "fail", "witness": _fmt(witness)}
    out.update(extra)
    return out


class _Suite:
    def __init__(self, games, name, rng):
        self.games = games
        self.name = name
        self.rng = rng
        self.sets = [solution_set(v, name) for v in games]
        self.verts = [solution_vertices(S) for S in self.sets]

    def NE(self):
        for k, S in enumerate(self.sets):
            if S.is_empty():
                return _result({"game": k})
        return _result()

    def CON(self):
        for k, S in enumerate(self.sets):
            if isinstance(S, PolyUnion) and not set_equal(S, convex_hull(S)):
                return _result({"game": k, "hull_vertices": convex_hull(S).points})
        return _result()

    def PO(self):
        for k, (v, verts) in enumerate(zip(self.games, self.verts)):
            for x in verts:
                if sum(x) != v[v.grand]:
                    return _result({"game": k, "point": x})
        return _result()

    def IR(self):
        for k, (v, verts) in enumerate(zip(self.games, self.verts)):
            for x in verts:
                for i in range(v.n):
                    if x[i] < v[1 << i]:
                        return _result({"game": k, "player": i + 1, "point": x})
        return _result()

    def _pairs(self):
        return itertools.combinations(range(len(self.games)), 2)

    def SUPA(self):
        # vertex sums; decisive for the convex solutions
        for a, b in self._pairs():
            target = solution_set(self.games[a] + self.games[b], self.name)
            for p in self.verts[a]:
                for q in self.verts[b]:
                    s = tuple(x + y for x, y in zip(p, q))
                    if not target.contains(s):
                        return _result({"games": [a, b], "point": s})
        return _result(scope="vertex sums")

    def SUBA(self):
        for a, b in self._pairs():
            total = solution_set(self.games[a] + self.games[b], self.name)
            P, Q = self.sets[a], self.sets[b]
            for x in solution_vertices(total):
                if not minkowski_member(x, P, Q):
                    return _result({"games": [a, b], "point": x})
        return _result(scope="vertices of the sum game's solution")

    def AN(self):
        n = self.games[0].n if self.games else 0
        for k, (v, S) in enumerate(zip(self.games, self.sets)):
            perm = list(range(1, n + 1))
            self.rng.shuffle(perm)
            image = _transform(S, lambda P: P.permute(perm))
            if not set_equal(image, solution_set(v.permute(perm), self.name)):
                return _result({"game": k, "permutation": perm})
        return _result()

    def ETP(self):
        for k, (v, verts) in enumerate(zip(self.games, self.verts)):
            for i, j in substitute_pairs(v):
                for x in verts:
                    if x[i - 1] != x[j - 1]:
                        return _result({"game": k, "pair": [i, j], "point": x})
        return _result()

    def RE(self):
        for k, (v, verts) in enumerate(zip(self.games, self.verts)):
            bounds = reasonable_bounds(v)
            for x in verts:
                for i, (lo, hi) in enumerate(bounds):
                    if not lo <= x[i] <= hi:
                        return _result({"game": k, "player": i + 1, "point": x})
        return _result()

    def COV(self):
        for k, (v, S) in enumerate(zip(self.games, self.sets)):
            alpha = Fraction(self.rng.randint(1, 6), self.rng.randint(1, 3))
            z = [Fraction(self.rng.randint(-5, 5), self.rng.randint(1, 3)) for _ in range(v.n)]
            w = v.scale(alpha) + additive_game(z)
            moved = _transform(S, lambda P: P.scale(alpha).translate(z))
            if not set_equal(moved, solution_set(w, self.name)):
                return _result({"game": k, "alpha": alpha, "shift": z})
        return _result()

    def NP(self):
        for k, (v, verts) in enumerate(zip(self.games, self.verts)):
            for i in players(null_players(v)):
                for x in verts:
                    if x[i - 1] != 0:
                        return _result({"game": k, "player": i, "point": x})
        return _result()

    def DUM(self):
        for k, (v, verts) in enumerate(zip(self.games, self.verts)):
            for i in players(dummy_players(v)):
                for x in verts:
                    if x[i - 1] != v[1 << (i - 1)]:
                        return _result({"game": k, "player": i, "point": x})
        return _result()


def property_suite(games, solution: str = INTERMEDIATE, *, seed: int = 0, properties=PROPERTIES) -> dict:
    """Run the named properties of ``solution`` on ``games`` (all with the same n).

    SUPA and SUBA run over all unordered pairs of distinct games; AN and COV
    draw one random permutation, scale and shift per game from ``seed``.
    """
    games = list(games)
    if not games:
        raise ValueError("property_suite needs at least one game")
    n = games[0].n
    if any(v.n != n for v in games):
        raise ValueError("all games must have the same number of players")
    if solution not in SOLUTIONS:
        raise ValueError(f"unknown solution {solution!r}; choose one of {', '.join(SOLUTIONS)}")
    suite = _Suite(games, solution, random.Random(seed))
    report = {}
    for prop in properties:
        if prop not in PROPERTIES:
            raise ValueError(f"unknown property {prop!r}")
        report[prop] = getattr(suite, prop)()
    return {"solution": solution, "n": n, "games": len(games), "seed": seed, "properties": report}


__all__ = [
    "CORE",
    "GameClassification",
    "INTERMEDIATE",
    "PROPERTIES",
    "SOLUTIONS",
    "WEBER",
    "classify",
    "dummy_players",
    "is_additive",
    "is_monotone",
    "is_simple",
    "is_submodular",
    "is_superadditive",
    "is_supermodular",
    "is_weakly_superadditive",
    "is_zero_normalized",
    "null_players",
    "property_suite",
    "reasonable_bounds",
    "solution_set",
    "solution_vertices",
    "substitute_pairs",
    "weakly_superadditive_violation",
]
