"""
Shape values of the bounds for N(B). Every implied constant is 1, so the
values are only meaningful as ratios and trends. Logarithms are natural.
"""

from fractions import Fraction

import mpmath
from sympy import integer_nthroot

from pencil_points.exceptions import DomainError

DELTA_LIMIT = Fraction(3, 392)
CROSSING_EXPONENT = Fraction(3, 49)
# Denominator limit used to read float parameters as exact rationals
PARAMETER_DENOMINATOR = 10 ** 9


def _require_b(B):
    if B < 3:
        raise DomainError(f"The bounds are stated for B >= 3, got B={B}")
    return mpmath.mpf(B)


def _require_height(H):
    if H < 1:
        raise DomainError(f"H(C) is at least 1, got {H}")
    return mpmath.mpf(H)


def _require_positive(name, value):
    if value <= 0:
        raise DomainError(f"{name} must be positive, got {value}")
    return mpmath.mpf(value)


def as_fraction(value):
    if isinstance(value, float):
        return Fraction(value).limit_denominator(PARAMETER_DENOMINATOR)
    return Fraction(value)


def m_recipe(B):
    """m = 1 + [sqrt(log B)]."""
    B = _require_b(B)
    return 1 + int(mpmath.floor(mpmath.sqrt(mpmath.log(B))))


def thm11_bound(B, r, m=None):
    """m^r (B^(1/(2 m^2)) + m^2) log B, with m from m_recipe when absent."""
    if m is None:
        m = m_recipe(B)
    B = _require_b(B)
    if r < 0 or m < 1:
        raise DomainError(f"Need r >= 0 and m >= 1, got r={r}, m={m}")
    m = mpmath.mpf(m)
    return float(m ** r * (B ** (1 / (2 * m ** 2)) + m ** 2) * mpmath.log(B))


def cor12_bound(B, r):
    """(log B)^(2 + r/2)."""
    B = _require_b(B)
    if r < 0:
        raise DomainError(f"Rank must be non-negative, got {r}")
    return float(mpmath.log(B) ** (2 + mpmath.mpf(r) / 2))


def thm31_bound(B, H, eps):
    """B^(1/2 + eps) / H^(1/8) + log B + 1."""
    B = _require_b(B)
    H = _require_height(H)
    eps = _require_positive("epsilon", eps)
    main = B ** (0.5 + eps) / H ** (mpmath.mpf(1) / 8)
    return float(main + mpmath.log(B) + 1)


def thm31_k_bound(B, H, k):
    """
    B^(4k/(8k-1)) / H^((4k^2-4k+1)/(4k(8k-1))) + 1 + log B, the bound for a
    fixed degree 2k before letting k grow.
    """
    B = _require_b(B)
    H = _require_height(H)
    if k < 1:
        raise DomainError(f"k must be at least 1, got {k}")
    k = mpmath.mpf(k)
    main = B ** (4 * k / (8 * k - 1)) / H ** (
        (4 * k ** 2 - 4 * k + 1) / (4 * k * (8 * k - 1))
    )
    return float(main + 1 + mpmath.log(B))


def thm13_bound(B, delta):
    """B^(1/2 - delta) for 0 < delta < 3/392."""
    B = _require_b(B)
    exact = as_fraction(delta)
    if not 0 < exact < DELTA_LIMIT:
        raise DomainError(
            f"delta must satisfy 0 < delta < 3/392, got {delta} ({exact})"
        )
    return float(B ** (mpmath.mpf(1) / 2 - mpmath.mpf(delta)))


def eq13_bound(B, r):
    """2^r B^(1/8) log B: the rank form of the m = 2 bound."""
    B = _require_b(B)
    if r < 0:
        raise DomainError(f"Rank must be non-negative, got {r}")
    eighth = mpmath.mpf(1) / 8
    return float(2 ** mpmath.mpf(r) * B ** eighth * mpmath.log(B))


def eq13_discriminant_bound(B, absD, eps):
    """|D|^(1/2 + eps) B^(1/8) log B."""
    B = _require_b(B)
    eps = _require_positive("epsilon", eps)
    absD = abs(Fraction(absD))
    if absD == 0:
        raise DomainError("|D| must be nonzero")
    d = mpmath.mpf(absD.numerator) / absD.denominator
    return float(d ** (0.5 + eps) * B ** (mpmath.mpf(1) / 8) * mpmath.log(B))


def eq14_bound(B, H, eps):
    """H^(6 + eps) B^(1/8) log B."""
    B = _require_b(B)
    H = _require_height(H)
    eps = _require_positive("epsilon", eps)
    return float(H ** (6 + eps) * B ** (mpmath.mpf(1) / 8) * mpmath.log(B))


def exponent_identity():
    """
    The exponent bookkeeping of the dichotomy: with H = B^(3/49) the rank
    free bound B^(1/2) / H^(1/8) becomes B^(1/2 - 3/392) = B^(193/392).
    """
    half = Fraction(1, 2)
    theorem_exponent = half - CROSSING_EXPONENT * Fraction(1, 8)
    assert theorem_exponent == half - DELTA_LIMIT == Fraction(193, 392)
    # Both main terms meet: 6 t + 1/8 = 1/2 - t/8 at t = 3/49
    assert 6 * CROSSING_EXPONENT + Fraction(1, 8) == half - (
        CROSSING_EXPONENT / 8
    )
    return {
        "crossing_exponent": CROSSING_EXPONENT,
        "theorem_exponent": theorem_exponent,
        "delta_limit": DELTA_LIMIT,
    }


def dichotomy_crossing(B):
    """
    H* = B^(3/49), where H^6 B^(1/8) = B^(1/2) / H^(1/8). Exact (an int)
    when B is an integer 49th power.
    """
    if B <= 1:
        raise DomainError(f"Need B > 1, got {B}")
    if isinstance(B, int):
        root, exact = integer_nthroot(B, 49)
        if exact:
            return int(root) ** 3
    return float(mpmath.mpf(B) ** (mpmath.mpf(3) / 49))


def crossing_by_bisection(B, tolerance=1e-15):
    """
    Solve H^6 B^(1/8) = B^(1/2) / H^(1/8) for H by bisection on log H.
    """
    if B <= 1:
        raise DomainError(f"Need B > 1, got {B}")
    with mpmath.workdps(40):
        log_b = mpmath.log(B)

        def gap(log_h):
            return 6 * log_h + log_b / 8 - (log_b / 2 - log_h / 8)

        lo, hi = mpmath.mpf(0), log_b
        while hi - lo > tolerance:
            mid = (lo + hi) / 2
            if gap(mid) > 0:
                hi = mid
            else:
                lo = mid
        return float(mpmath.exp((lo + hi) / 2))
