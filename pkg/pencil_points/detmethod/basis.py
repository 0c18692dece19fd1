"""
Monomial bases of the degree 2k slice of the coordinate ring of C.

Exponents are built in a frame where the largest minor sits at (2, 3) and
then mapped back to the curve's own coordinates, so evaluation never needs
the permuted pencil.
"""

import itertools
from dataclasses import dataclass
from math import comb
from typing import Tuple

from pencil_points.curve.jacobian import require_nonsingular
from pencil_points.curve.pencil import max_minor_permutation
from pencil_points.exceptions import DomainError, TheoremViolationError
from pencil_points.kernel.linalg import matrix_rank

IDENTITY_ORDER = (0, 1, 2, 3)


def dim_sk(k):
    """
    dim S_k from the Koszul resolution of a complete intersection of two
    quadrics: C(k+3,3) - 2 C(k+1,3) + C(k-1,3). Always 4k.
    """
    k = int(k)
    if k < 1:
        raise DomainError(f"k must be at least 1, got {k}")
    dimension = comb(k + 3, 3) - 2 * comb(k + 1, 3) + comb(k - 1, 3)
    if dimension != 4 * k:
        raise TheoremViolationError(f"dim S_{k} = {dimension}, not {4 * k}")
    return dimension


def _groups(k):
    """The eight groups of exponents in the normalised frame."""
    return [
        [(2 * k - 2 * j, 2 * j, 0, 0) for j in range(k + 1)],
        [(2 * k - 1 - 2 * j, 2 * j + 1, 0, 0) for j in range(k)],
        [(2 * k - 1 - 2 * j, 2 * j, 1, 0) for j in range(k)],
        [(2 * k - 2 - 2 * j, 2 * j + 1, 1, 0) for j in range(k)],
        [(2 * k - 1 - 2 * j, 2 * j, 0, 1) for j in range(k)],
        [(2 * k - 2 - 2 * j, 2 * j + 1, 0, 1) for j in range(k)],
        [(2 * k - 2 - 2 * j, 2 * j, 1, 1) for j in range(k)],
        [(2 * k - 3 - 2 * j, 2 * j + 1, 1, 1) for j in range(k - 1)],
    ]


@dataclass(frozen=True)
class MonomialBasis:
    """
    8k monomials of degree 2k. exponents are in the curve's coordinates;
    permutation is the frame order (frame coordinate t is curve coordinate
    permutation[t]).
    """

    k: int
    exponents: Tuple[Tuple[int, int, int, int], ...]
    permutation: Tuple[int, int, int, int]
    group_sizes: Tuple[int, ...]

    def __len__(self):
        return len(self.exponents)

    @property
    def inverse_permutation(self):
        inverse = [0] * 4
        for t, original in enumerate(self.permutation):
            inverse[original] = t
        return tuple(inverse)

    def evaluate(self, x):
        x = tuple(int(v) for v in x)
        values = []
        for e in self.exponents:
            value = 1
            for xi, ei in zip(x, e):
                value *= xi ** ei
            values.append(value)
        return values

    def labels(self):
        labels = []
        for e in self.exponents:
            factors = [
                f"x{i}" if ei == 1 else f"x{i}^{ei}"
                for i, ei in enumerate(e)
                if ei
            ]
            labels.append("*".join(factors))
        return labels


def monomial_basis(k, order=IDENTITY_ORDER):
    k = int(k)
    if k < 1:
        raise DomainError(f"k must be at least 1, got {k}")
    order = tuple(order)
    if sorted(order) != [0, 1, 2, 3]:
        raise ValueError(f"{order} is not a permutation of (0, 1, 2, 3)")

    groups = _groups(k)
    exponents = []
    for group in groups:
        for frame_exponent in group:
            e = [0] * 4
            for t, original in enumerate(order):
                e[original] = frame_exponent[t]
            exponents.append(tuple(e))
    assert len(exponents) == 8 * k
    return MonomialBasis(
        k=k,
        exponents=tuple(exponents),
        permutation=order,
        group_sizes=tuple(len(group) for group in groups),
    )


def basis_s2k(c, k):
    """
    The basis of S_2k used for the determinant method on a nonsingular
    pencil, with the lexicographically first largest minor moved to (2, 3).
    """
    require_nonsingular(c)
    return monomial_basis(k, max_minor_permutation(c))


def degree_monomials(degree):
    """Exponent quadruples of the given degree, in lexicographic order."""
    return [
        e
        for e in itertools.product(range(degree + 1), repeat=4)
        if sum(e) == degree
    ][::-1]


def _ideal_slice(c, degree):
    """Rows m*q and m*r over all monomials m of degree - 2."""
    index = {e: i for i, e in enumerate(degree_monomials(degree))}
    rows = []
    for m in degree_monomials(degree - 2):
        for coefficients in (c.a, c.b):
            row = [0] * len(index)
            for i, coefficient in enumerate(coefficients):
                e = list(m)
                e[i] += 2
                row[index[tuple(e)]] += coefficient
            rows.append(row)
    return rows, index


def verify_basis_independence(c, k, order=None):
    """
    True iff the 8k basis monomials are linearly independent modulo the
    degree 2k part of the ideal (q, r).
    :param c: DiagonalPencil
    :param k: Half the degree
    :param order: Frame order; defaults to the largest-minor order of c
    :return bool:
    """
    if order is None:
        order = max_minor_permutation(c)
    basis = monomial_basis(k, order)
    ideal_rows, index = _ideal_slice(c, 2 * k)

    basis_rows = []
    for e in basis.exponents:
        row = [0] * len(index)
        row[index[e]] = 1
        basis_rows.append(row)

    ideal_rank = matrix_rank(ideal_rows)
    full_rank = matrix_rank(ideal_rows + basis_rows)
    return full_rank - ideal_rank == len(basis)
