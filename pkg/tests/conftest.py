from __future__ import annotations

import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from intermediate_set.game import Game  # noqa: E402

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")


def glove_example():
    """Player 1 holds a left glove, players 2 and 3 right gloves."""
    return Game.from_function(3, lambda A: Fraction(int(A & 1 and A & 6 != 0)))


def star_game():
    return Game.from_function(3, lambda A: Fraction({0: 0, 1: 0, 2: 2, 3: 3}[bin(A).count("1")]))


def disconnected_simple():
    """Winning iff the coalition contains player 1 or both players 2 and 3."""
    return Game.from_function(3, lambda A: Fraction(int(bool(A & 1) or A & 6 == 6)))


@pytest.fixture
def glove():
    return glove_example()


@pytest.fixture
def star():
    return star_game()


@pytest.fixture
def simple_disconnected():
    return disconnected_simple()


rationals = st.fractions(min_value=-10, max_value=10, max_denominator=4)


@st.composite
def games(draw, min_n=1, max_n=3):
    n = draw(st.integers(min_n, max_n))
    vals = [Fraction(0)] + [draw(rationals) for _ in range((1 << n) - 1)]
    return Game(n, vals)


@st.composite
def points(draw, n):
    return tuple(draw(rationals) for _ in range(n))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
