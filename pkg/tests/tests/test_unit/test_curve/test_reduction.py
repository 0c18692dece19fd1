import pytest

from pencil_points.curve.pencil import DiagonalPencil
from pencil_points.curve.reduction import (
    bad_prime_product,
    bad_primes,
    good_primes,
    is_good_prime,
)
from pencil_points.exceptions import SingularCurveError


def test_bad_primes(
    worked_curve, definite_curve, orbit_pair_curve, five_adic_curve
):
    assert bad_primes(worked_curve) == [2, 3, 5]
    assert bad_primes(definite_curve) == [2, 3]
    assert bad_primes(orbit_pair_curve) == [2, 3, 5, 7]
    assert bad_primes(five_adic_curve) == [2, 3, 7, 11, 13]
    assert bad_prime_product(worked_curve) == 30


def test_bad_primes_use_primitive_model():
    c = DiagonalPencil((3, 3, 3, 3), (0, 3, 6, 9))
    assert bad_primes(c) == [2, 3]


def test_good_primes(worked_curve, definite_curve):
    assert good_primes(worked_curve, 12) == [7, 11]
    assert good_primes(definite_curve, 10) == [5, 7]
    assert good_primes(worked_curve, 2) == []
    assert is_good_prime(worked_curve, 7)
    assert not is_good_prime(worked_curve, 2)
    assert not is_good_prime(worked_curve, 5)
    assert not is_good_prime(worked_curve, 9)


def test_singular(singular_curve):
    with pytest.raises(SingularCurveError):
        bad_primes(singular_curve)
