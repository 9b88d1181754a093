"""Players, coalitions, games and coalitional chains.

Coalitions are plain ``int`` bit masks: player ``i`` (1-based) is bit ``i - 1``.
The empty coalition is ``0`` and the grand coalition of ``n`` players is
``(1 << n) - 1``.  Payoff vectors are tuples of :class:`fractions.Fraction`.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Iterator, Mapping, Sequence

DEFAULT_MAX_N = 8

PayoffVector = tuple  # tuple[Fraction, ...]


class GameError(ValueError):
    """Malformed game, coalition, chain or game file."""


class CapacityError(GameError):
    """The player count exceeds the configured maximum."""


def ordered_bell(n: int) -> int:
    """Number of ordered set partitions of an ``n``-element set."""
    a = [1]
    for m in range(1, n + 1):
        a.append(sum(comb(m, k) * a[m - k] for k in range(1, m + 1)))
    return a[n]


def check_capacity(n: int, max_n: int = DEFAULT_MAX_N) -> None:
    if n < 1:
        raise GameError(f"player count must be positive, got {n}")
    if n > max_n:
        raise CapacityError(
            f"n={n} exceeds max_n={max_n}: chain enumeration would visit "
            f"ordered Bell({n}) = {ordered_bell(n)} chains"
        )


# -- coalitions --------------------------------------------------------------

def grand(n: int) -> int:
    return (1 << n) - 1


def coalition(players: Iterable[int]) -> int:
    """Bit mask of a collection of 1-based player indices."""
    mask = 0
    for i in players:
        if i < 1:
            raise GameError(f"player indices are 1-based, got {i}")
        mask |= 1 << (i - 1)
    return mask


def players(mask: int) -> tuple[int, ...]:
    """1-based members of a coalition, ascending."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def size(mask: int) -> int:
    return bin(mask).count("1")


def incidence_vector(mask: int, n: int) -> PayoffVector:
    return tuple(Fraction((mask >> i) & 1) for i in range(n))


def format_coalition(mask: int) -> str:
    return ",".join(str(i) for i in players(mask))


def parse_coalition(text: str, n: int | None = None) -> int:
    """Parse ``"1,3"`` into a mask; members must be strictly increasing."""
    text = text.strip()
    if not text:
        raise GameError("empty coalition key")
    try:
        ids = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise GameError(f"malformed coalition key {text!r}") from None
    if any(b <= a for a, b in zip(ids, ids[1:])):
        raise GameError(f"coalition key {text!r} is not strictly increasing")
    if ids[0] < 1 or (n is not None and ids[-1] > n):
        raise GameError(f"coalition key {text!r} names a player outside 1..{n}")
    return coalition(ids)


def submasks(mask: int) -> Iterator[int]:
    """Nonempty submasks of ``mask`` in ascending order."""
    sub = 0
    while True:
        sub = (sub - mask) & mask
        if sub == 0:
            return
        yield sub


def coalition_sum(x: Sequence, mask: int):
    """x(A), the sum of the coordinates of ``x`` over coalition ``A``."""
    total = Fraction(0)
    i = 0
    while mask:
        if mask & 1:
            total += x[i]
        mask >>= 1
        i += 1
    return total


def as_vector(x: Iterable) -> PayoffVector:
    return tuple(Fraction(c) for c in x)


# -- games -------------------------------------------------------------------

class Game:
    """A TU game ``v: 2^N -> Q`` stored as a dense table indexed by bit mask.

    ``v[A]`` looks up a mask; ``v(1, 2)`` looks up the coalition of the listed
    players.
    """

    __slots__ = ("n", "values")

    def __init__(self, n: int, values: Sequence, *, max_n: int = DEFAULT_MAX_N):
        check_capacity(n, max_n)
        if len(values) != 1 << n:
            raise GameError(f"expected {1 << n} coalition values, got {len(values)}")
        vals = tuple(Fraction(x) for x in values)
        if vals[0] != 0:
            raise GameError("v(empty set) must be 0")
        self.n = n
        self.values = vals

    @classmethod
    def from_function(cls, n: int, f, **kw) -> "Game":
        """Materialize ``f(mask)`` on every coalition; ``v(empty)`` is forced to 0."""
        return cls(n, [0] + [f(m) for m in range(1, 1 << n)], **kw)

    @classmethod
    def from_mapping(cls, n: int, table: Mapping[int, object], **kw) -> "Game":
        missing = [m for m in range(1, 1 << n) if m not in table]
        if missing:
            raise GameError(f"missing value for coalition {format_coalition(missing[0])!r}")
        return cls(n, [0] + [table[m] for m in range(1, 1 << n)], **kw)

    @property
    def grand(self) -> int:
        return (1 << self.n) - 1

    def __getitem__(self, mask: int) -> Fraction:
        return self.values[mask]

    def __call__(self, *members: int) -> Fraction:
        return self.values[coalition(members)]

    def __eq__(self, other):
        return isinstance(other, Game) and self.n == other.n and self.values == other.values

    def __hash__(self):
        return hash((self.n, self.values))

    def __repr__(self):
        return f"Game(n={self.n}, values={[str(x) for x in self.values]})"

    def __add__(self, other: "Game") -> "Game":
        _same_n(self, other)
        return Game(self.n, [a + b for a, b in zip(self.values, other.values)], max_n=self.n)

    def __sub__(self, other: "Game") -> "Game":
        _same_n(self, other)
        return Game(self.n, [a - b for a, b in zip(self.values, other.values)], max_n=self.n)

    def __neg__(self) -> "Game":
        return Game(self.n, [-a for a in self.values], max_n=self.n)

    def scale(self, alpha) -> "Game":
        alpha = Fraction(alpha)
        return Game(self.n, [alpha * a for a in self.values], max_n=self.n)

    __rmul__ = scale

    def permute(self, perm: Sequence[int]) -> "Game":
        """The game ``pi v`` with ``(pi v)(A) = v(pi^{-1}(A))``.

        ``perm[i - 1]`` is the image of player ``i``.
        """
        inv = [0] * self.n
        for i, j in enumerate(perm):
            inv[j - 1] = i
        vals = [Fraction(0)] * (1 << self.n)
        for mask in range(1 << self.n):
            pre = 0
            for j in range(self.n):
                if mask >> j & 1:
                    pre |= 1 << inv[j]
            vals[mask] = self.values[pre]
        return Game(self.n, vals, max_n=self.n)


def _same_n(a: Game, b: Game) -> None:
    if a.n != b.n:
        raise GameError(f"games have different player counts ({a.n} vs {b.n})")


def additive_game(weights: Sequence) -> Game:
    w = as_vector(weights)
    return Game.from_function(len(w), lambda m: coalition_sum(w, m), max_n=len(w))


def unanimity_game(n: int, carrier: int) -> Game:
    """``u_T(A) = 1`` iff ``T`` is a subset of ``A``."""
    if carrier == 0 or carrier >> n:
        raise GameError("carrier must be a nonempty coalition of the player set")
    return Game.from_function(n, lambda m: int(m & carrier == carrier), max_n=n)


def zero_game(n: int) -> Game:
    return Game(n, [0] * (1 << n), max_n=n)


# -- chains ------------------------------------------------------------------

@dataclass(frozen=True)
class Chain:
    """A coalitional chain ``C_1 < C_2 < ... < C_k = N`` (strict inclusions).

    Equivalently the ordered partition ``blocks = (C_1, C_2 - C_1, ...)``.
    """

    n: int
    coalitions: tuple[int, ...]

    def __post_init__(self):
        cs = self.coalitions
        if not cs or cs[0] == 0 or cs[-1] != (1 << self.n) - 1:
            raise GameError("a chain starts with a nonempty coalition and ends at N")
        for a, b in zip(cs, cs[1:]):
            if a & b != a or a == b:
                raise GameError("chain coalitions must be strictly increasing")

    @classmethod
    def of(cls, n: int, coalitions: Iterable[int]) -> "Chain":
        """Build from coalitions given as a set or in any order."""
        return cls(n, tuple(sorted(set(coalitions), key=size)))

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[int]) -> "Chain":
        acc, out = 0, []
        for b in blocks:
            if b & acc:
                raise GameError("blocks of an ordered partition must be disjoint")
            acc |= b
            out.append(acc)
        return cls(n, tuple(out))

    @classmethod
    def from_permutation(cls, perm: Sequence[int]) -> "Chain":
        """Maximal chain ``{pi(1), pi(1)pi(2), ...}`` of an arrival order."""
        return cls.from_blocks(len(perm), [1 << (i - 1) for i in perm])

    @property
    def blocks(self) -> tuple[int, ...]:
        prev, out = 0, []
        for c in self.coalitions:
            out.append(c & ~prev)
            prev = c
        return tuple(out)

    def steps(self) -> Iterator[tuple[int, int]]:
        """Pairs ``(C_{i-1}, C_i - C_{i-1})``."""
        prev = 0
        for c in self.coalitions:
            yield prev, c & ~prev
            prev = c

    def label(self) -> list[str]:
        return [format_coalition(c) for c in self.coalitions]

    def __len__(self):
        return len(self.coalitions)

    def __str__(self):
        return "{" + ", ".join(format_coalition(c).replace(",", "") for c in self.coalitions) + "}"


def enumerate_chains(n: int, *, max_n: int = DEFAULT_MAX_N) -> Iterator[Chain]:
    """Every coalitional chain on ``n`` players, exactly once.

    Blocks are peeled off the remaining player set recursively; at each level
    candidate blocks run through the nonempty submasks in ascending order.
    """
    check_capacity(n, max_n)
    full = (1 << n) - 1
    prefix: list[int] = []

    def rec(remaining: int, acc: int) -> Iterator[Chain]:
        for block in submasks(remaining):
            c = acc | block
            prefix.append(c)
            if c == full:
                chain = object.__new__(Chain)
                object.__setattr__(chain, "n", n)
                object.__setattr__(chain, "coalitions", tuple(prefix))
                yield chain
            else:
                yield from rec(remaining & ~block, c)
            prefix.pop()

    return rec(full, 0)


def all_permutations(n: int) -> Iterator[tuple[int, ...]]:
    return itertools.permutations(range(1, n + 1))


def marginal_vector(v: Game, perm: Sequence[int]) -> PayoffVector:
    """Marginal contributions along the arrival order ``perm`` (1-based players)."""
    if sorted(perm) != list(range(1, v.n + 1)):
        raise GameError(f"{tuple(perm)} is not a permutation of 1..{v.n}")
    x = [Fraction(0)] * v.n
    acc = 0
    for i in perm:
        nxt = acc | (1 << (i - 1))
        x[i - 1] = v[nxt] - v[acc]
        acc = nxt
    return tuple(x)


def is_feasible(x: Sequence, v: Game) -> bool:
    """x(N) <= v(N)."""
    return coalition_sum(x, v.grand) <= v[v.grand]


# -- game files --------------------------------------------------------------

def parse_rational(value) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise GameError(f"non-rational value {value!r}; write rationals as strings")
    if isinstance(value, int):
        return Fraction(value)
    if not isinstance(value, str):
        raise GameError(f"non-rational value {value!r}")
    try:
        return Fraction(value.strip())
    except (ValueError, ZeroDivisionError):
        raise GameError(f"non-rational value {value!r}") from None


def format_rational(x) -> str:
    return str(Fraction(x))


def _reject_duplicates(pairs):
    out = {}
    for k, val in pairs:
        if k in out:
            raise GameError(f"duplicate key {k!r}")
        out[k] = val
    return out


def parse_game(text: str, *, max_n: int = DEFAULT_MAX_N) -> Game:
    """Parse a game file (JSON with ``n`` and a ``values`` map keyed by ``"1,2"``)."""
    try:
        doc = json.loads(text, object_pairs_hook=_reject_duplicates)
    except json.JSONDecodeError as exc:
        raise GameError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict) or "n" not in doc or "values" not in doc:
        raise GameError('game file needs keys "n" and "values"')
    n = doc["n"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise GameError(f'"n" must be an integer, got {n!r}')
    check_capacity(n, max_n)
    raw = doc["values"]
    if not isinstance(raw, dict):
        raise GameError('"values" must be an object')
    table: dict[int, Fraction] = {}
    for key, val in raw.items():
        if key.strip() == "":
            raise GameError("the empty coalition must not be listed")
        mask = parse_coalition(key, n)
        if mask in table:
            raise GameError(f"duplicate key for coalition {format_coalition(mask)!r}")
        table[mask] = parse_rational(val)
    return Game.from_mapping(n, table, max_n=max_n)


def game_to_json(v: Game) -> dict:
    return {
        "n": v.n,
        "values": {
            format_coalition(m): format_rational(v[m])
            for m in sorted(range(1, 1 << v.n), key=lambda m: (size(m), players(m)))
        },
    }


def dump_game(v: Game) -> str:
    return json.dumps(game_to_json(v), indent=2)
