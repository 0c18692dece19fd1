import pytest

from pencil_points.curve.pencil import (
    DiagonalPencil,
    PluckerSixtuple,
    height,
    is_nonsingular,
    is_primitive,
    max_minor_permutation,
    plucker,
    primitive_reduce,
)
from pencil_points.exceptions import DegeneratePencilError


def test_degenerate_pencil():
    with pytest.raises(DegeneratePencilError):
        DiagonalPencil((1, 1, 1, 1), (2, 2, 2, 2))
    with pytest.raises(DegeneratePencilError):
        DiagonalPencil((0, 0, 0, 0), (1, 2, 3, 4))
    with pytest.raises(ValueError):
        DiagonalPencil((1, 2, 3), (1, 2, 3))


def test_contains(worked_curve):
    assert worked_curve.contains((1, -1, 1, 1))
    assert not worked_curve.contains((1, 0, 0, 0))


def test_swap_and_permute(worked_curve):
    assert height(worked_curve.swap()) == height(worked_curve)
    permuted = worked_curve.permuted((0, 3, 1, 2))
    assert permuted.a == (1, 1, -1, -1)
    assert permuted.b == (1, 0, 2, -3)
    assert permuted.contains((1, 1, 1, 1))
    assert worked_curve.label() == "a=(1,-1,-1,1);b=(1,2,-3,0)"


def test_plucker(worked_curve):
    d = plucker(worked_curve)
    assert d.d == (3, -2, -1, 5, -2, 3)
    assert d.minor(1, 0) == -3
    assert d.minor(2, 3) == 3
    assert d.content == 1
    assert d.height == 5
    assert d.product == -180
    assert d.max_pair == (1, 2)
    assert d.as_dict() == {
        "01": 3,
        "02": -2,
        "03": -1,
        "12": 5,
        "13": -2,
        "23": 3,
    }
    with pytest.raises(DegeneratePencilError):
        PluckerSixtuple((0,) * 6)


def test_plucker_relation(worked_curve, orbit_pair_curve, five_adic_curve):
    for c in (worked_curve, orbit_pair_curve, five_adic_curve):
        d = plucker(c)
        assert (
            d.minor(0, 1) * d.minor(2, 3)
            - d.minor(0, 2) * d.minor(1, 3)
            + d.minor(0, 3) * d.minor(1, 2)
            == 0
        )


def test_height(worked_curve, orbit_pair_curve, five_adic_curve):
    assert height(worked_curve) == 5
    assert height(orbit_pair_curve) == 15
    assert height(five_adic_curve) == 208
    assert height(DiagonalPencil((3, 3, 3, 3), (0, 3, 6, 9))) == 3


def test_primitive_reduce(worked_curve):
    assert is_primitive(worked_curve)
    assert primitive_reduce(worked_curve) is worked_curve

    c = DiagonalPencil((3, 3, 3, 3), (0, 3, 6, 9))
    assert not is_primitive(c)
    reduced = primitive_reduce(c)
    assert reduced.a == (1, 0, -1, -2)
    assert reduced.b == (0, 1, 2, 3)
    assert plucker(reduced).d == (1, 2, 3, 1, 2, 1)

    reduced = primitive_reduce(DiagonalPencil((2, 0, 2, 0), (0, 2, 0, 2)))
    assert (reduced.a, reduced.b) == ((1, 0, 1, 0), (0, 1, 0, 1))


def test_primitive_reduce_keeps_points(orbit_pair_curve):
    scaled = DiagonalPencil((-7, 0, 15, -8), (1, -3, 3, -1))
    assert not is_primitive(scaled)
    reduced = primitive_reduce(scaled)
    assert is_primitive(reduced)
    assert height(reduced) == height(scaled)
    for x in ((1, 1, 1, 1), (1, 2, 3, 4)):
        assert reduced.contains(x)


def test_is_nonsingular(worked_curve, singular_curve):
    assert is_nonsingular(worked_curve)
    assert not is_nonsingular(singular_curve)


def test_max_minor_permutation(worked_curve, definite_curve):
    assert max_minor_permutation(worked_curve) == (0, 3, 1, 2)
    assert max_minor_permutation(definite_curve) == (1, 2, 0, 3)
