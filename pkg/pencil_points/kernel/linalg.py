from dataclasses import dataclass
from functools import reduce
from typing import Tuple

from sympy import Matrix, QQ, ilcm
from sympy.polys.matrices import DomainMatrix

from pencil_points.kernel.arithmetic import gcd_vec


@dataclass(frozen=True)
class IntMatrix:
    """
    Rectangular matrix of Python integers. Rows are stored as tuples so the
    matrix can be hashed and shipped between worker processes.
    """

    entries: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        entries = tuple(tuple(int(v) for v in row) for row in self.entries)
        if not entries or not entries[0]:
            raise ValueError("Matrix dimensions must be positive")
        width = len(entries[0])
        if any(len(row) != width for row in entries):
            raise ValueError("Matrix rows must all have the same length")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows):
        return cls(tuple(tuple(row) for row in rows))

    @property
    def rows(self):
        return len(self.entries)

    @property
    def cols(self):
        return len(self.entries[0])

    @property
    def shape(self):
        return self.rows, self.cols

    @property
    def is_square(self):
        return self.rows == self.cols

    def submatrix(self, row_indices):
        return IntMatrix(tuple(self.entries[i] for i in row_indices))

    def to_sympy(self):
        return Matrix([list(row) for row in self.entries])

    def as_lists(self):
        return [list(row) for row in self.entries]


def as_int_matrix(m):
    if isinstance(m, IntMatrix):
        return m
    return IntMatrix.from_rows(m)


def det_exact(m):
    """
    Exact determinant by fraction-free (Bareiss) elimination.
    :param m: Square IntMatrix, or a list of integer rows
    :return int: The determinant
    """
    m = as_int_matrix(m)
    if not m.is_square:
        raise ValueError(
            f"Determinant needs a square matrix, got {m.rows}x{m.cols}"
        )
    return int(m.to_sympy().det(method="bareiss"))


def matrix_rank(m):
    m = as_int_matrix(m)
    return int(DomainMatrix.from_Matrix(m.to_sympy()).convert_to(QQ).rank())


def canonical_vector(values):
    """
    Scale an integer vector to content 1 with first nonzero entry positive.
    """
    values = [int(v) for v in values]
    g = gcd_vec(values)
    if g == 0:
        return tuple(values)
    values = [v // g for v in values]
    leading = next(v for v in values if v != 0)
    if leading < 0:
        values = [-v for v in values]
    return tuple(values)


def rational_kernel_vector(m):
    """
    A nonzero integer vector v with m.v = 0, content 1 and first nonzero
    entry positive, or None if m has full column rank.
    """
    m = as_int_matrix(m)
    matrix = m.to_sympy()
    basis = matrix.nullspace()
    if not basis:
        return None

    vector = basis[0]
    denominator = reduce(ilcm, [entry.q for entry in vector], 1)
    result = canonical_vector(int(entry * denominator) for entry in vector)

    assert all(
        sum(a * b for a, b in zip(row, result)) == 0 for row in m.entries
    )
    return result
