import itertools

import pytest

from pencil_points.curve.pencil import DiagonalPencil, is_primitive
from pencil_points.detmethod.search import through_points_candidates
from pencil_points.exceptions import TheoremViolationError
from pencil_points.points.grassmann import complementary_pair, grassmann_check
from pencil_points.points.rational import enumerate_points


def test_complementary_pair():
    assert complementary_pair(0, 1) == (2, 3)
    assert complementary_pair(1, 3) == (0, 2)


def test_grassmann_check(orbit_pair_curve):
    assert grassmann_check(orbit_pair_curve, (1, 1, 1, 1), (1, 2, 3, 4)) == 1
    assert grassmann_check(orbit_pair_curve, (1, 1, 1, 1), (1, 1, 1, 1)) == 0
    assert grassmann_check(orbit_pair_curve, (1, 2, 3, 4), (1, -2, 3, 4)) == 0


def test_grassmann_off_curve(orbit_pair_curve):
    with pytest.raises(ValueError):
        grassmann_check(orbit_pair_curve, (1, 0, 0, 0), (1, 1, 1, 1))


def test_grassmann_every_pair(worked_curve, orbit_pair_curve):
    for c, B in ((worked_curve, 10), (orbit_pair_curve, 10)):
        points = enumerate_points(c, B)
        for P, Q in itertools.combinations(points, 2):
            assert grassmann_check(c, P, Q) >= 0


def test_grassmann_violation(orbit_pair_curve):
    # a pencil through both points whose minors are 3 times too large
    scaled = DiagonalPencil((-7, 0, 15, -8), (1, -3, 3, -1))
    with pytest.raises(TheoremViolationError):
        grassmann_check(scaled, (1, 1, 1, 1), (1, 2, 3, 4))


@pytest.mark.slow
def test_grassmann_every_pair_full():
    pairs = through_points_candidates(radius=10, point_range=2)[:10]
    assert len(pairs) == 10
    for a, b in pairs:
        c = DiagonalPencil(a, b)
        assert is_primitive(c)
        points = enumerate_points(c, 100)
        assert len(points) >= 2
        for P, Q in itertools.combinations(points, 2):
            assert grassmann_check(c, P, Q) >= 0
