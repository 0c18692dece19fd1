from mpmath import iv

from pencil_points.exceptions import DomainError
from pencil_points.kernel.arithmetic import prime_factors


def mertens_intervals(Pi):
    """
    Enclosures of sum_{p | Pi} log(p)/p and log log Pi + 2.
    """
    Pi = int(Pi)
    if Pi <= 1:
        raise DomainError(f"Pi must be an integer > 1, got {Pi}")
    lhs = iv.mpf(0)
    for p in prime_factors(Pi):
        lhs += iv.log(iv.mpf(p)) / p
    rhs = iv.log(iv.log(iv.mpf(Pi))) + 2
    return lhs, rhs


def mertens_check(Pi):
    """
    True iff sum_{p | Pi} log(p)/p <= log log Pi + 2, certified: the upper
    end of the left enclosure is below the lower end of the right one.
    """
    lhs, rhs = mertens_intervals(Pi)
    return bool(lhs.b <= rhs.a)
