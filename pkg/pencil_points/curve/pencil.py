from dataclasses import dataclass
from math import prod
from typing import Tuple

from pencil_points.constants import PAIRS
from pencil_points.exceptions import DegeneratePencilError
from pencil_points.kernel.arithmetic import gcd_vec
from pencil_points.kernel.lattice import hnf_rank2, minors_rank2


def _quadruple(values, name):
    values = tuple(int(v) for v in values)
    if len(values) != 4:
        raise ValueError(
            f"'{name}' needs exactly four coefficients, got {len(values)}"
        )
    return values


@dataclass(frozen=True)
class DiagonalPencil:
    """
    The curve q = r = 0 in P^3 with
    q = a0 x0^2 + a1 x1^2 + a2 x2^2 + a3 x3^2 and r likewise with b.
    """

    a: Tuple[int, int, int, int]
    b: Tuple[int, int, int, int]

    def __post_init__(self):
        object.__setattr__(self, "a", _quadruple(self.a, "a"))
        object.__setattr__(self, "b", _quadruple(self.b, "b"))
        if not any(minors_rank2(self.a, self.b)):
            raise DegeneratePencilError(
                f"Coefficient rows a={self.a} and b={self.b} are "
                f"proportional, so they do not define a pencil"
            )

    def q(self, x):
        return sum(ai * int(xi) ** 2 for ai, xi in zip(self.a, x))

    def r(self, x):
        return sum(bi * int(xi) ** 2 for bi, xi in zip(self.b, x))

    def contains(self, x):
        return self.q(x) == 0 and self.r(x) == 0

    def swap(self):
        return DiagonalPencil(self.b, self.a)

    def permuted(self, order):
        """New coordinate t is old coordinate order[t]."""
        return DiagonalPencil(
            tuple(self.a[i] for i in order), tuple(self.b[i] for i in order)
        )

    def label(self):
        a = ",".join(str(v) for v in self.a)
        b = ",".join(str(v) for v in self.b)
        return f"a=({a});b=({b})"


@dataclass(frozen=True)
class PluckerSixtuple:
    """
    The 2x2 minors d_ij = a_i b_j - a_j b_i, indexed in the order
    (0,1), (0,2), (0,3), (1,2), (1,3), (2,3).
    """

    d: Tuple[int, ...]

    def __post_init__(self):
        d = tuple(int(v) for v in self.d)
        if len(d) != 6:
            raise ValueError("A Plucker sixtuple has six entries")
        if not any(d):
            raise DegeneratePencilError("All six minors vanish")
        object.__setattr__(self, "d", d)

    def minor(self, i, j):
        if i > j:
            return -self.minor(j, i)
        return self.d[PAIRS.index((i, j))]

    @property
    def content(self):
        return gcd_vec(self.d)

    @property
    def height(self):
        return max(abs(v) for v in self.d) // self.content

    @property
    def product(self):
        return prod(self.d)

    @property
    def max_pair(self):
        """Lexicographically first index pair attaining max |d_ij|."""
        largest = max(abs(v) for v in self.d)
        return next(
            pair for pair, v in zip(PAIRS, self.d) if abs(v) == largest
        )

    def as_dict(self):
        return {f"{i}{j}": v for (i, j), v in zip(PAIRS, self.d)}


def plucker(c):
    return PluckerSixtuple(minors_rank2(c.a, c.b))


def height(c):
    """
    H(C) = max |d_ij| / gcd(d_ij).
    """
    return plucker(c).height


def is_primitive(c):
    return plucker(c).content == 1


def primitive_reduce(c):
    """
    A primitive pencil spanning the same plane of quadratic forms as c. An
    already primitive pencil is returned unchanged; otherwise the rows are
    the Hermite normal form basis of the saturated coefficient lattice.
    """
    if is_primitive(c):
        return c
    a, b = hnf_rank2((c.a, c.b))
    reduced = DiagonalPencil(a, b)
    assert is_primitive(reduced)
    return reduced


def is_nonsingular(c):
    """
    The quartic prod(lam a_i + mu b_i) has a repeated root, and the curve a
    singular point, exactly when some minor d_ij vanishes.
    """
    return all(v != 0 for v in plucker(c).d)


def max_minor_permutation(c):
    """
    Coordinate order moving the lexicographically first maximal minor to
    position (2, 3); the two other coordinates keep their relative order.
    """
    i, j = plucker(c).max_pair
    rest = [t for t in range(4) if t not in (i, j)]
    return tuple(rest + [i, j])
