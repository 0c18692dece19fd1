"""
Choice of the auxiliary prime.

A prime p is large enough when p > T with
T = 2 B^(4k/(8k-1)) / H^((4k^2-4k+1)/(4k(8k-1))). Raising both sides to
the power 4k(8k-1) turns this into the integer comparison
p^(4k(8k-1)) H^(4k^2-4k+1) > 2^(4k(8k-1)) B^(16k^2).
"""

import logging

import mpmath
from sympy import nextprime

from pencil_points.curve.pencil import height as curve_height
from pencil_points.curve.reduction import bad_primes
from pencil_points.detmethod.certificates import hadamard_bound
from pencil_points.exceptions import DomainError

logger = logging.getLogger(__name__)


def _exponents(k):
    return 4 * k * (8 * k - 1), 4 * k * k - 4 * k + 1


def _check(k, B):
    if k < 1 or B < 1:
        raise DomainError(f"Need k >= 1 and B >= 1, got k={k}, B={B}")


def prime_threshold(k, B, height):
    """T as a high precision real, for display."""
    k, B, height = int(k), int(B), int(height)
    _check(k, B)
    e, n = _exponents(k)
    with mpmath.workdps(50):
        numerator = mpmath.mpf(B) ** (mpmath.mpf(4 * k) / (8 * k - 1))
        return 2 * numerator / mpmath.mpf(height) ** (mpmath.mpf(n) / e)


def exceeds_threshold(p, k, B, height):
    """p > T, decided in exact integer arithmetic."""
    e, n = _exponents(k)
    return p ** e * height ** n > 2 ** e * B ** (16 * k * k)


def choose_prime(c, k, B, height=None):
    """
    Smallest good prime of c strictly above T.
    :param c: Nonsingular DiagonalPencil
    :param k: Half the degree of the auxiliary forms
    :param B: Height bound
    :param height: Override for H(C) in the threshold (defaults to H(C))
    :return int: The prime
    """
    k, B = int(k), int(B)
    _check(k, B)
    if height is None:
        height = curve_height(c)
    height = int(height)
    bad = set(bad_primes(c))

    start = max(2, int(mpmath.floor(prime_threshold(k, B, height))) - 2)
    p = start if start == 2 else int(nextprime(start - 1))
    while p in bad or not exceeds_threshold(p, k, B, height):
        p = int(nextprime(p))
    logger.debug(f"Chose p={p} for k={k}, B={B}, H={height}")
    return p


def forced_vanishing(c, k, B, p, height=None):
    """
    True when p^(4k(8k-1)) H^(4k^2-4k+1) exceeds the Hadamard bound, so
    every 8k x 8k same-class determinant must be 0.
    """
    k, B, p = int(k), int(B), int(p)
    if height is None:
        height = curve_height(c)
    e, n = _exponents(k)
    return p ** e * int(height) ** n > hadamard_bound(k, B)
