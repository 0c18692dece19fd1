"""
Reduction types of a diagonal pencil.

A prime p is treated as good when p is odd and divides none of the six
minors of the primitive model. This may mark a prime bad where a model
with smaller discriminant would have good reduction (3 in particular is
decided by the minors alone, not by 6|D|), which never weakens a
divisibility statement.
"""

from math import prod

from pencil_points.curve.jacobian import require_nonsingular
from pencil_points.curve.pencil import plucker, primitive_reduce
from pencil_points.kernel.arithmetic import (
    is_prime,
    prime_factors,
    primes_in,
)


def bad_primes(c):
    require_nonsingular(c)
    minors = plucker(primitive_reduce(c)).d
    primes = {2}
    for d in minors:
        primes.update(prime_factors(d))
    return sorted(primes)


def bad_prime_product(c):
    return prod(bad_primes(c))


def is_good_prime(c, p):
    p = int(p)
    if p == 2 or not is_prime(p):
        return False
    return p not in bad_primes(c)


def good_primes(c, limit):
    """
    Good primes up to and including limit, ascending.
    """
    bad = set(bad_primes(c))
    if limit < 3:
        return []
    return [p for p in primes_in(1, int(limit)) if p not in bad]
