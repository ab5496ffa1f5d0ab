import random
from fractions import Fraction

import pytest

from ehrhart_lf import Polytope, general_position_check


def prism_apex(k: int) -> Polytope:
    """conv{(0,0,0), (4,0,0), (3,6,0), (2,2,10k)}: the running worked example."""
    return Polytope(((0, 0, 0), (4, 0, 0), (3, 6, 0), (2, 2, 10 * k)), name=f"P{k}")


def random_rational_simplex(rng: random.Random, d: int, radius: int = 4, denom: int = 3) -> Polytope:
    """Random simplex with small rational coordinates, in general position."""
    while True:
        pts = [
            tuple(Fraction(rng.randint(-radius * denom, radius * denom), rng.randint(1, denom)) for _ in range(d))
            for _ in range(d + 1)
        ]
        if len(set(pts)) < d + 1:
            continue
        try:
            p = Polytope(tuple(pts))
        except ValueError:
            continue
        if general_position_check(p):
            return p


@pytest.fixture
def p1() -> Polytope:
    return prism_apex(1)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240607)
