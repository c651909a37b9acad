from fractions import Fraction
from itertools import product

import pytest

from slitpaths.kernel import WeightedStepSet


def brute_force_weight(steps: WeightedStepSet, w: int, u: int, v: int, n: int) -> Fraction:
    """Sum of path weights over every length-n step word; exponential, tiny n only."""
    moves = steps.steps()
    total = Fraction(0)
    for word in product(moves, repeat=n):
        h, weight = u, Fraction(1)
        for d, wt in word:
            h += d
            if not 0 <= h <= w:
                break
            weight *= wt
        else:
            if h == v:
                total += weight
    return total


@pytest.fixture
def dyck():
    return WeightedStepSet.dyck()


@pytest.fixture
def motzkin():
    return WeightedStepSet.motzkin()


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
