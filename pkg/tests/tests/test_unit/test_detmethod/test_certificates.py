import math

import pytest

from pencil_points.curve.pencil import DiagonalPencil
from pencil_points.detmethod.certificates import (
    aggregate_class_exponent,
    class_divisibility,
    class_exponent,
    hadamard_bound,
    hadamard_certificate,
    hadamard_record,
    height_divisibility,
    height_exponent,
    maximal_minors,
    partition_divisibility,
)
from pencil_points.detmethod.matrices import eval_matrix
from pencil_points.detmethod.search import independent_rows
from pencil_points.exceptions import BadPrimeError, ResourceError
from pencil_points.kernel.linalg import IntMatrix
from pencil_points.points.classes import partition_classes
from pencil_points.utils import json_value


def test_hadamard_bound():
    assert hadamard_bound(1, 2) == 8 ** 4 * 2 ** 16
    assert hadamard_bound(2, 1) == 16 ** 8


def test_height_exponent():
    assert height_exponent(0, 5) == math.inf
    assert height_exponent(50, 5) == 2
    assert height_exponent(-125, 5) == 3
    assert height_exponent(7, 1) == math.inf
    assert height_exponent(7, 5) == 0


def test_class_exponent():
    assert class_exponent(1) == 0
    assert class_exponent(2) == 1
    assert class_exponent(8) == 28
    assert aggregate_class_exponent([2, 2, 3]) == 5


def test_height_divisibility_worked(worked_curve, worked_points):
    certificate = height_divisibility(worked_curve, worked_points, 1)
    assert certificate.kind == "height"
    assert certificate.base == 5
    assert certificate.required == 1
    assert certificate.determinant == 0
    assert certificate.observed == math.inf
    assert certificate.verified

    record = json_value(certificate.as_dict())
    assert record == {
        "kind": "height",
        "base": 5,
        "required": 1,
        "observed": "infinite",
        "det": "0",
        "verified": True,
    }


def test_height_divisibility_nonzero(orbit_pair_curve, orbit_pair_points):
    chosen = independent_rows(orbit_pair_curve, orbit_pair_points, 1)
    assert len(chosen) == 8
    certificate = height_divisibility(orbit_pair_curve, chosen, 1)
    assert certificate.determinant != 0
    assert certificate.determinant % 15 == 0
    assert certificate.observed >= 1
    assert certificate.verified


def test_height_divisibility_errors(worked_curve, worked_points):
    with pytest.raises(ValueError):
        height_divisibility(worked_curve, worked_points[:7], 1)

    scaled = DiagonalPencil((3, 3, 3, 3), (0, 3, 6, 9))
    with pytest.raises(ValueError):
        height_divisibility(scaled, [(1, 1, 1, 1)] * 8, 1)


def test_hadamard(orbit_pair_curve, orbit_pair_points):
    chosen = independent_rows(orbit_pair_curve, orbit_pair_points, 1)
    M = eval_matrix(orbit_pair_curve, chosen, 1)
    assert hadamard_certificate(M, 4)
    record = hadamard_record(M, 4)
    assert record["verified"]
    assert record["bound"] == str(hadamard_bound(1, 4))
    # (1, 2, 3, 4) type points are above height 1
    with pytest.raises(ValueError):
        hadamard_certificate(M, 1)

    rectangular = eval_matrix(orbit_pair_curve, orbit_pair_points, 1)
    with pytest.raises(ValueError):
        hadamard_certificate(rectangular, 4)


def test_maximal_minors():
    matrix = IntMatrix.from_rows([[1, 2, 3], [4, 5, 6]])
    minors = list(maximal_minors(matrix))
    assert len(minors) == 3
    assert minors[0] == [[1, 2], [4, 5]]

    tall = IntMatrix.from_rows([[1, 2], [3, 4], [5, 6]])
    assert len(list(maximal_minors(tall))) == 3

    with pytest.raises(ResourceError):
        list(maximal_minors(IntMatrix.from_rows([[1] * 40] * 10)))


def test_class_divisibility(five_adic_curve, five_adic_points):
    partition = partition_classes(five_adic_curve, five_adic_points, 5)
    for _, members in partition.same_class_groups():
        M = eval_matrix(five_adic_curve, members, 1)
        certificate = class_divisibility(M, 5, five_adic_curve)
        assert certificate.kind == "class"
        assert certificate.required == 1
        assert certificate.observed >= 1
        assert certificate.verified


def test_class_divisibility_errors(five_adic_curve, five_adic_points):
    partition = partition_classes(five_adic_curve, five_adic_points, 5)
    (_, first), (_, second) = partition.same_class_groups()[:2]
    M = eval_matrix(five_adic_curve, [first[0], second[0]], 1)
    with pytest.raises(ValueError):
        class_divisibility(M, 5)
    with pytest.raises(BadPrimeError):
        class_divisibility(M, 3, five_adic_curve)


def test_partition_divisibility(orbit_pair_curve, orbit_pair_points):
    chosen = independent_rows(orbit_pair_curve, orbit_pair_points, 1)
    M = eval_matrix(orbit_pair_curve, chosen, 1)
    for p in (11, 13, 17):
        certificate = partition_divisibility(M, p, orbit_pair_curve)
        assert certificate.kind == "partition"
        assert certificate.verified
