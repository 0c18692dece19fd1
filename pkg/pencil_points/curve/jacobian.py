import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

import mpmath
from sympy import Poly, symbols

from pencil_points.constants import RANK_C_DEFAULT, RANK_C0_DEFAULT
from pencil_points.curve.pencil import is_nonsingular, plucker
from pencil_points.exceptions import (
    ParameterWarning,
    SingularCurveError,
    TheoremViolationError,
)

RANK_C_THRESHOLD = 1 / (2 * math.log(2))


@dataclass(frozen=True)
class WeierstrassModel:
    """
    Jacobian of the curve as y^2 = x^3 + A x + B, built from the binary
    quartic prod(lam a_i + mu b_i) = e4 lam^4 + ... + e0 mu^4.
    """

    quartic: Tuple[int, int, int, int, int]
    invI: int
    invJ: int
    A: int
    B: int
    discD: Fraction

    @property
    def j_invariant(self):
        four_a_cubed = 4 * self.A ** 3
        return Fraction(1728 * four_a_cubed, four_a_cubed + 27 * self.B ** 2)


def require_nonsingular(c):
    if not is_nonsingular(c):
        raise SingularCurveError(
            f"Curve {c.label()} has a vanishing minor "
            f"{plucker(c).as_dict()}, so it is singular"
        )


def binary_quartic(c):
    """
    Coefficients (e4, e3, e2, e1, e0) of prod_i (lam a_i + mu b_i).
    """
    lam, mu = symbols("lam mu")
    expression = 1
    for ai, bi in zip(c.a, c.b):
        expression *= ai * lam + bi * mu
    poly = Poly(expression, lam, mu)
    return tuple(
        int(poly.coeff_monomial(lam ** (4 - i) * mu ** i)) for i in range(5)
    )


def quartic_invariants(quartic):
    e4, e3, e2, e1, e0 = quartic
    invI = 12 * e4 * e0 - 3 * e3 * e1 + e2 ** 2
    invJ = (
        72 * e4 * e2 * e0
        + 9 * e3 * e2 * e1
        - 27 * e4 * e1 ** 2
        - 27 * e3 ** 2 * e0
        - 2 * e2 ** 3
    )
    return invI, invJ


def discriminant(c):
    """
    D = 2^-8 prod_{i != j} d_ij = (prod_{i<j} d_ij)^2 / 256, exactly.
    """
    require_nonsingular(c)
    return Fraction(plucker(c).product ** 2, 256)


def weierstrass(c):
    require_nonsingular(c)
    quartic = binary_quartic(c)
    invI, invJ = quartic_invariants(quartic)

    if 4 * invI ** 3 - invJ ** 2 != 27 * plucker(c).product ** 2:
        raise TheoremViolationError(
            f"4I^3 - J^2 != 27 (prod d)^2 for {c.label()} (I={invI}, "
            f"J={invJ})"
        )
    return WeierstrassModel(
        quartic=quartic,
        invI=invI,
        invJ=invJ,
        A=-27 * invI,
        B=-27 * invJ,
        discD=discriminant(c),
    )


def rank_estimate(discD, c=RANK_C_DEFAULT, c0=RANK_C0_DEFAULT):
    """
    Heuristic upper estimate c log|D| + c0 for the Mordell-Weil rank of the
    Jacobian. It is never the true rank.
    :param discD: Discriminant (anything Fraction accepts)
    :param c: Slope, meaningful only above 1 / (2 log 2)
    :param c0: Additive constant, also returned when |D| <= 1
    :return float: The estimate
    """
    if c <= RANK_C_THRESHOLD:
        warnings.warn(
            f"Rank estimate slope c={c} is not above 1/(2 log 2) "
            f"~ {RANK_C_THRESHOLD:.6f}",
            ParameterWarning,
        )
    absD = abs(Fraction(discD))
    if absD <= 1:
        return float(c0)
    log_d = mpmath.log(absD.numerator) - mpmath.log(absD.denominator)
    return float(mpmath.mpf(c) * log_d + c0)
