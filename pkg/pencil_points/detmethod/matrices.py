import logging
from dataclasses import dataclass
from typing import Tuple

from pencil_points.detmethod.basis import MonomialBasis, basis_s2k
from pencil_points.kernel.linalg import IntMatrix, det_exact

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EvalMatrix:
    """
    entries[i][j] = f_j(P_i): basis monomial j at the integer coordinates
    of point i.
    """

    k: int
    basis: MonomialBasis
    points: Tuple
    entries: IntMatrix

    @property
    def is_square(self):
        return self.entries.is_square

    def rows_for(self, indices):
        return EvalMatrix(
            k=self.k,
            basis=self.basis,
            points=tuple(self.points[i] for i in indices),
            entries=self.entries.submatrix(indices),
        )


def eval_matrix(c, points, k, basis=None):
    """
    Evaluate the degree 2k basis at each point.
    :param c: DiagonalPencil the points lie on
    :param points: Non-empty list of ProjectivePoint (or integer quadruples)
    :param k: Half the degree
    :param basis: MonomialBasis; defaults to basis_s2k(c, k)
    :return EvalMatrix:
    """
    points = tuple(points)
    if not points:
        raise ValueError("Need at least one point to build a matrix")
    for point in points:
        if not c.contains(tuple(point)):
            raise ValueError(f"{tuple(point)} is not on {c.label()}")
    if len({tuple(point) for point in points}) < len(points):
        logger.warning("Repeated points: the determinant will be 0")

    if basis is None:
        basis = basis_s2k(c, k)
    rows = [basis.evaluate(tuple(point)) for point in points]
    return EvalMatrix(
        k=int(k), basis=basis, points=points, entries=IntMatrix.from_rows(rows)
    )


def power_matrix(alpha, beta):
    """Rows (alpha^k, alpha^(k-1) beta, ..., beta^k) for k = len - 1."""
    k = len(alpha) - 1
    return [
        [int(a) ** (k - t) * int(b) ** t for t in range(k + 1)]
        for a, b in zip(alpha, beta)
    ]


def vandermonde(alpha, beta):
    """
    prod_{i<j} (alpha_i beta_j - alpha_j beta_i), which equals the
    determinant of power_matrix(alpha, beta).
    """
    if len(alpha) != len(beta):
        raise ValueError(
            f"alpha and beta differ in length ({len(alpha)} != {len(beta)})"
        )
    if not alpha:
        raise ValueError("vandermonde needs at least one pair")
    result = 1
    for i in range(len(alpha)):
        for j in range(i + 1, len(alpha)):
            result *= int(alpha[i]) * int(beta[j]) - int(alpha[j]) * int(
                beta[i]
            )
    return result


def vandermonde_matches_determinant(alpha, beta):
    return vandermonde(alpha, beta) == det_exact(power_matrix(alpha, beta))
