import numpy as np
import pytest

from pencil_points.curve.pencil import DiagonalPencil
from pencil_points.kernel.arithmetic import gcd_vec
from pencil_points.kernel.lattice import minors_rank2
from pencil_points.points.rational import ProjectivePoint, sign_orbit


def points_from_orbits(*representatives):
    coordinates = set()
    for x in representatives:
        coordinates.update(sign_orbit(x))
    return [ProjectivePoint(x) for x in sorted(coordinates)]


def sample_pencils(n, seed, radius=10):
    """
    n primitive nonsingular pencils with coefficients drawn uniformly from
    [-radius, radius].
    """
    rng = np.random.default_rng(seed)
    pencils = []
    while len(pencils) < n:
        values = [int(v) for v in rng.integers(-radius, radius + 1, size=8)]
        d = minors_rank2(values[:4], values[4:])
        if gcd_vec(d) != 1 or not all(d):
            continue
        pencils.append(DiagonalPencil(values[:4], values[4:]))
    return pencils


@pytest.fixture
def pencil_sampler():
    return sample_pencils


@pytest.fixture
def worked_curve():
    """H(C) = 5, eight points of height 1."""
    return DiagonalPencil((1, -1, -1, 1), (1, 2, -3, 0))


@pytest.fixture
def definite_curve():
    """q is positive definite, so there are no rational points."""
    return DiagonalPencil((1, 1, 1, 1), (0, 1, 2, 3))


@pytest.fixture
def orbit_pair_curve():
    """Through (1, 1, 1, 1) and (1, 2, 3, 4); H(C) = 15."""
    return DiagonalPencil((-4, 5, 0, -1), (1, -3, 3, -1))


@pytest.fixture
def five_adic_curve():
    """Through (1, 5, 1, 1) and (5, 1, 1, 2); H(C) = 208."""
    return DiagonalPencil((1, 0, 7, -8), (0, 1, -33, 8))


@pytest.fixture
def singular_curve():
    """d03 = 0."""
    return DiagonalPencil((1, -1, -1, 1), (2, -1, -3, 2))


@pytest.fixture
def worked_points():
    return points_from_orbits((1, 1, 1, 1))


@pytest.fixture
def orbit_pair_points():
    return points_from_orbits((1, 1, 1, 1), (1, 2, 3, 4))


@pytest.fixture
def five_adic_points():
    return points_from_orbits((1, 5, 1, 1), (5, 1, 1, 2))
