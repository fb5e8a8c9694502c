import math
from fractions import Fraction as F

import pytest

import twospec

SQRT2 = math.sqrt(2.0)
SQRT3 = math.sqrt(3.0)
SQRT6 = math.sqrt(6.0)


@pytest.fixture
def pair_4_2():
    """Four integer nodes with two prescribed interior zeros."""
    return twospec.RealSpectrumPair(xs=(1, 2, 3, 4), ys=(F(3, 2), F(7, 2)))


@pytest.fixture
def pair_7_3():
    """Seven nodes 0..6 with three prescribed zeros at half-integers."""
    return twospec.RealSpectrumPair(
        xs=tuple(range(7)), ys=(F(1, 2), F(5, 2), F(9, 2))
    )


@pytest.fixture
def circle_3_2():
    """Angles (pi/2, 4pi/3, 5pi/3) against (0, pi)."""
    return twospec.circle_pair_from_angles(
        (math.pi / 2, 4 * math.pi / 3, 5 * math.pi / 3), (0.0, math.pi)
    )


CIRCLE_7_THETAS = (
    math.pi / 6,
    math.pi / 3,
    math.pi / 2,
    2 * math.pi / 3,
    5 * math.pi / 6,
    7 * math.pi / 6,
    3 * math.pi / 2,
)


@pytest.fixture
def circle_7_3():
    """Seven nodes against three base points, bands of sizes 3, 2, 2."""
    phis = (math.pi / 12, 7 * math.pi / 12, 3.0)
    return twospec.circle_pair_from_angles(CIRCLE_7_THETAS, phis)
