import math

from sympy import factorint, isprime, multiplicity, primerange


def gcd_vec(values):
    """
    Greatest common divisor of the absolute values of a list of integers.
    The gcd of an all-zero list is 0.
    :param values: Non-empty iterable of integers
    :return int: Non-negative gcd
    """
    values = [int(v) for v in values]
    if not values:
        raise ValueError("gcd_vec needs at least one value")
    return math.gcd(*values)


def valuation(n, p):
    """
    Exponent of the prime p in n. Returns math.inf for n = 0, so the result
    compares greater than any finite exponent.
    """
    n = int(n)
    p = int(p)
    if p < 2:
        raise ValueError(f"Valuation base must be a prime, not {p}")
    if n == 0:
        return math.inf
    return int(multiplicity(p, abs(n)))


def primes_in(lo, hi):
    """
    All primes in the half-open range (lo, hi], ascending.
    """
    lo = int(lo)
    hi = int(hi)
    if lo < 1 or lo > hi:
        raise ValueError(f"Need 1 <= lo <= hi, got lo={lo}, hi={hi}")
    return [int(p) for p in primerange(lo + 1, hi + 1)]


def is_prime(n):
    return bool(isprime(int(n)))


def prime_factors(n):
    """Distinct prime factors of |n|, ascending. Raises for n = 0."""
    n = abs(int(n))
    if n == 0:
        raise ValueError("0 has no finite prime factorisation")
    return sorted(int(p) for p in factorint(n))
