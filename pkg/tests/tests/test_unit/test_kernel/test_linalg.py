import numpy as np
import pytest

from pencil_points.kernel.linalg import (
    IntMatrix,
    canonical_vector,
    det_exact,
    matrix_rank,
    rational_kernel_vector,
)


def test_int_matrix():
    m = IntMatrix.from_rows([[1, 2, 3], [4, 5, 6]])
    assert m.shape == (2, 3)
    assert not m.is_square
    assert m.submatrix([1]).as_lists() == [[4, 5, 6]]
    with pytest.raises(ValueError):
        IntMatrix.from_rows([[1, 2], [3]])
    with pytest.raises(ValueError):
        IntMatrix.from_rows([])


def cofactor_det(rows):
    if len(rows) == 1:
        return rows[0][0]
    return sum(
        (-1) ** j
        * rows[0][j]
        * cofactor_det([row[:j] + row[j + 1 :] for row in rows[1:]])
        for j in range(len(rows))
    )


def random_square_matrices(n, seed):
    rng = np.random.default_rng(seed)
    matrices = []
    for _ in range(n):
        size = int(rng.integers(1, 6))
        entries = rng.integers(-50, 51, size=(size, size))
        matrices.append([[int(v) for v in row] for row in entries])
    return matrices


def test_det_exact_random():
    for rows in random_square_matrices(200, seed=0):
        assert det_exact(rows) == cofactor_det(rows)


@pytest.mark.slow
def test_det_exact_random_full():
    for rows in random_square_matrices(10 ** 4, seed=1):
        assert det_exact(rows) == cofactor_det(rows)


def test_det_exact():
    assert det_exact([[2, 1], [1, 1]]) == 1
    assert det_exact([[1, 2], [2, 4]]) == 0
    big = 10 ** 30
    assert det_exact([[big, 1], [1, big]]) == big * big - 1
    with pytest.raises(ValueError):
        det_exact([[1, 2, 3], [4, 5, 6]])


def test_matrix_rank():
    assert matrix_rank([[1, 2], [2, 4]]) == 1
    assert matrix_rank([[1, 0, 0], [0, 1, 0]]) == 2
    assert matrix_rank([[0, 0]]) == 0


def test_canonical_vector():
    assert canonical_vector((-2, 4, 0, -6)) == (1, -2, 0, 3)
    assert canonical_vector((0, -3, 3, 0)) == (0, 1, -1, 0)
    assert canonical_vector((0, 0)) == (0, 0)


def test_rational_kernel_vector():
    assert rational_kernel_vector([[1, 1, 0], [0, 1, 1]]) == (1, -1, 1)
    assert rational_kernel_vector([[1, 0], [0, 1]]) is None

    rows = [[2, 3, 5, 7], [1, -1, 4, 0]]
    v = rational_kernel_vector(rows)
    assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in rows)
    assert canonical_vector(v) == v
