import math

import numpy as np
import pytest
from sympy import primerange

from pencil_points.bounds.mertens import mertens_check, mertens_intervals
from pencil_points.curve.reduction import bad_prime_product
from pencil_points.exceptions import DomainError


@pytest.mark.parametrize("Pi", [2, 6, 30, 30030, 2 ** 10 * 3 ** 5, 10 ** 12])
def test_mertens_check(Pi):
    assert mertens_check(Pi)


def test_mertens_intervals():
    lhs, rhs = mertens_intervals(30)
    assert lhs.a <= lhs.b < rhs.a <= rhs.b
    # repeated factors count once
    assert mertens_intervals(2 ** 5)[0].a == mertens_intervals(2)[0].a


@pytest.mark.parametrize("Pi", [1, 0, -6])
def test_mertens_domain(Pi):
    with pytest.raises(DomainError):
        mertens_intervals(Pi)


def random_values(n, seed):
    """
    n values drawn from [2, 10^12], then n // 10 products of distinct
    primes below 200.
    """
    rng = np.random.default_rng(seed)
    values = [int(v) for v in rng.integers(2, 10 ** 12 + 1, size=n)]
    primes = list(primerange(2, 200))
    while len(values) < n + n // 10:
        chosen = rng.choice(primes, size=rng.integers(1, 20), replace=False)
        values.append(math.prod(int(p) for p in chosen))
    return values


def test_mertens_check_random():
    assert all(mertens_check(Pi) for Pi in random_values(200, seed=0))


@pytest.mark.slow
def test_mertens_check_random_full():
    assert all(mertens_check(Pi) for Pi in random_values(10 ** 4, seed=1))


def test_mertens_check_primorials():
    for limit in (3, 10, 100, 1000):
        assert mertens_check(math.prod(primerange(2, limit)))


def test_mertens_check_bad_primes(worked_curve, pencil_sampler):
    assert mertens_check(bad_prime_product(worked_curve))
    for c in pencil_sampler(50, seed=5, radius=20):
        assert mertens_check(bad_prime_product(c))
