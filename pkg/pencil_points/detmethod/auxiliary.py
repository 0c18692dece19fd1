from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from pencil_points.detmethod.basis import MonomialBasis, basis_s2k
from pencil_points.detmethod.matrices import eval_matrix
from pencil_points.detmethod.primes import choose_prime
from pencil_points.exceptions import DomainError
from pencil_points.kernel.linalg import rational_kernel_vector
from pencil_points.points.finite_field import count_fp


@dataclass(frozen=True)
class AuxiliaryForm:
    """G = sum_j coefficients[j] f_j over the basis monomials f_j."""

    basis: MonomialBasis
    coefficients: Tuple[int, ...]

    def evaluate(self, x):
        return sum(
            c * f for c, f in zip(self.coefficients, self.basis.evaluate(x))
        )

    def vanishes_at(self, x):
        return self.evaluate(x) == 0

    def terms(self):
        return [
            (label, c)
            for label, c in zip(self.basis.labels(), self.coefficients)
            if c
        ]


def auxiliary_form(c, points, k):
    """
    A nonzero combination of the basis of S_2k vanishing at every point,
    or None when the evaluation matrix has full column rank. Since the basis
    is independent modulo (q, r), G never vanishes identically on C.
    """
    points = list(points)
    if not points:
        basis = basis_s2k(c, k)
        return AuxiliaryForm(basis, (1,) + (0,) * (len(basis) - 1))

    M = eval_matrix(c, points, k)
    coefficients = rational_kernel_vector(M.entries)
    if coefficients is None:
        return None
    form = AuxiliaryForm(M.basis, coefficients)
    assert all(form.vanishes_at(tuple(point)) for point in points)
    return form


def bezout_class_bound(k):
    """Bezout: a degree 2k form not containing C meets it in <= 8k points."""
    k = int(k)
    if k < 1:
        raise DomainError(f"k must be at least 1, got {k}")
    return 8 * k


def dm_upper_bound(c, B, k=1):
    """
    n_p 8k with p = choose_prime(c, k, B): every residue class mod p holds
    at most 8k points of height <= B, so this bounds N(B).
    """
    p = choose_prime(c, k, B)
    return count_fp(c, p) * bezout_class_bound(k)


def s_formula(a, b, m):
    """
    s = 4(m^2 a + b), valid for positive a, b, m with 1/a + m^2/b < 4.
    """
    a, b, m = int(a), int(b), int(m)
    if min(a, b, m) < 1:
        raise DomainError(f"a, b, m must be positive, got {(a, b, m)}")
    if Fraction(1, a) + Fraction(m * m, b) >= 4:
        raise DomainError(
            f"1/a + m^2/b < 4 fails for a={a}, b={b}, m={m} "
            f"({Fraction(1, a) + Fraction(m * m, b)} >= 4)"
        )
    return 4 * (m * m * a + b)
