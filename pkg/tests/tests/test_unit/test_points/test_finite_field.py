import numpy as np
import pytest

from pencil_points.curve.jacobian import weierstrass
from pencil_points.curve.pencil import DiagonalPencil
from pencil_points.curve.reduction import good_primes
from pencil_points.exceptions import BadPrimeError
from pencil_points.points.finite_field import (
    FpPoint,
    count_fp,
    count_weierstrass,
    fp_points,
    hasse_check,
    jacobian_point_count,
    normalise_mod_p,
    reduce_mod_p,
    singular_fp_points,
    square_counts,
)


def test_fp_point():
    assert FpPoint(5, (1, 6, -1, 0)).coords == (1, 1, 4, 0)
    with pytest.raises(ValueError):
        FpPoint(5, (2, 0, 0, 0))
    with pytest.raises(ValueError):
        FpPoint(5, (0, 0, 0, 0))


def test_normalise_mod_p():
    assert normalise_mod_p((2, 4, 6, 1), 7) == FpPoint(7, (1, 2, 3, 4))
    with pytest.raises(ValueError):
        normalise_mod_p((5, 10, 0, 0), 5)


def test_reduce_mod_p(worked_curve, five_adic_curve):
    assert reduce_mod_p((5, 1, 1, 2), 5) == FpPoint(5, (0, 1, 1, 2))
    assert reduce_mod_p((5, -1, -1, -2), 5) == FpPoint(5, (0, 1, 1, 2))
    assert reduce_mod_p((1, 2, 3, 4), 7, worked_curve) == FpPoint(
        7, (1, 2, 3, 4)
    )
    assert reduce_mod_p((1, 5, 1, 1), 5, five_adic_curve) == FpPoint(
        5, (1, 0, 1, 1)
    )
    with pytest.raises(BadPrimeError):
        reduce_mod_p((1, 1, 1, 1), 5, worked_curve)
    with pytest.raises(BadPrimeError):
        reduce_mod_p((1, 1, 1, 1), 9)


def test_square_counts():
    np.testing.assert_array_equal(square_counts(5), [1, 2, 0, 0, 2])
    assert square_counts(101).sum() == 101


def test_count_fp_definite(definite_curve):
    for p in (5, 7, 11):
        assert count_fp(definite_curve, p) == 8


def test_count_fp_bad_prime(worked_curve):
    for p in (2, 3, 5, 4):
        with pytest.raises(BadPrimeError):
            count_fp(worked_curve, p)


def test_fp_points(worked_curve, five_adic_curve):
    for c, p in ((worked_curve, 7), (worked_curve, 13), (five_adic_curve, 5)):
        points = fp_points(c, p)
        assert len(points) == count_fp(c, p)
        assert len(set(points)) == len(points)
        for point in points:
            x = point.coords
            assert sum(a * v * v for a, v in zip(c.a, x)) % p == 0
            assert sum(b * v * v for b, v in zip(c.b, x)) % p == 0


def test_counts_agree_with_jacobian(
    worked_curve, definite_curve, orbit_pair_curve, five_adic_curve
):
    for c in (worked_curve, definite_curve, orbit_pair_curve, five_adic_curve):
        for p in good_primes(c, 60):
            n_p = count_fp(c, p)
            assert n_p == jacobian_point_count(c, p)
            assert hasse_check(n_p, p)


@pytest.mark.slow
def test_counts_agree_with_jacobian_random(pencil_sampler):
    for c in pencil_sampler(20, seed=21):
        for p in good_primes(c, 200):
            n_p = count_fp(c, p)
            assert n_p == jacobian_point_count(c, p)
            assert hasse_check(n_p, p)


def test_good_reduction_is_smooth(pencil_sampler):
    for c in pencil_sampler(3, seed=22):
        for p in good_primes(c, 20):
            assert singular_fp_points(c, p) == []


@pytest.mark.slow
def test_good_reduction_is_smooth_full(pencil_sampler):
    for c in pencil_sampler(10, seed=23):
        for p in good_primes(c, 50):
            assert singular_fp_points(c, p) == []
            assert len(fp_points(c, p)) == count_fp(c, p)


def test_jacobian_point_count_at_three():
    c = DiagonalPencil((1, 0, 7, -8), (0, 1, 1, 5))
    # every minor is prime to 3: 1, 1, 5, -7, 8, 43
    assert count_fp(c, 3) == jacobian_point_count(c, 3)


def test_count_weierstrass(definite_curve):
    model = weierstrass(definite_curve)
    assert count_weierstrass(model, 5) == 8
    with pytest.raises(ValueError):
        count_weierstrass(model, 3)


def test_hasse_check():
    assert hasse_check(8, 5)
    assert hasse_check(1, 2)
    assert not hasse_check(20, 5)


def test_singular_fp_points(worked_curve, singular_curve):
    assert singular_fp_points(worked_curve, 7) == []
    singular = singular_fp_points(singular_curve, 5)
    assert FpPoint(5, (1, 0, 0, 2)) in singular
