import logging
import math
import itertools
from dataclasses import dataclass, field
from typing import Tuple

import dask
import numpy as np

from pencil_points.constants import (
    ENUM_ROW_BYTES,
    MEMORY_BUDGET_MB_DEFAULT,
    POINT_MEMORY_BYTES,
    WORKERS_DEFAULT,
)
from pencil_points.curve.jacobian import require_nonsingular
from pencil_points.curve.pencil import DiagonalPencil, plucker
from pencil_points.exceptions import ResourceError
from pencil_points.kernel.linalg import canonical_vector

logger = logging.getLogger(__name__)

# Largest |value| handled by the int64 row path
INT64_SAFE = 2 ** 62
FLOAT_EXACT_SQRT = 2 ** 52


@dataclass(frozen=True, order=True)
class ProjectivePoint:
    """
    Rational point of P^3 with coprime integer coordinates, first nonzero
    coordinate positive.
    """

    x: Tuple[int, int, int, int]
    height: int = field(init=False, compare=False)

    def __post_init__(self):
        x = tuple(int(v) for v in self.x)
        if len(x) != 4:
            raise ValueError("A point of P^3 has four coordinates")
        if canonical_vector(x) != x or not any(x):
            raise ValueError(
                f"{x} is not a normalised point (gcd 1, first nonzero "
                f"coordinate positive)"
            )
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "height", max(abs(v) for v in x))

    @classmethod
    def from_coordinates(cls, x):
        if not any(int(v) for v in x):
            raise ValueError("(0, 0, 0, 0) is not a projective point")
        return cls(canonical_vector(x))

    def __iter__(self):
        return iter(self.x)


def estimate_enumeration_bytes(B, workers=WORKERS_DEFAULT):
    """
    Working memory of the row sweep plus room for up to 16 points per x0
    row (one non-negative orbit for each sign pattern).
    """
    return (B + 1) * (workers * ENUM_ROW_BYTES + 16 * POINT_MEMORY_BYTES)


def sign_orbit(x):
    """Every sign change of x, normalised and deduplicated."""
    signs = [(1, -1) if v else (1,) for v in x]
    return {
        canonical_vector(tuple(s * v for s, v in zip(choice, x)))
        for choice in itertools.product(*signs)
    }


def _squares_python(x0, B, c03, c13, c02, c12, d23):
    found = []
    for x1 in range(B + 1):
        if x0 == 0 and x1 == 0:
            continue
        u = -(c03 * x0 * x0 + c13 * x1 * x1)
        v = c02 * x0 * x0 + c12 * x1 * x1
        if u % d23 or v % d23:
            continue
        u //= d23
        v //= d23
        if u < 0 or v < 0 or u > B * B or v > B * B:
            continue
        x2 = math.isqrt(u)
        x3 = math.isqrt(v)
        if x2 * x2 == u and x3 * x3 == v:
            found.append((x0, x1, x2, x3))
    return found


def _squares_numpy(x0, B, c03, c13, c02, c12, d23):
    x1 = np.arange(B + 1, dtype=np.int64)
    t = x1 * x1
    s = x0 * x0
    u_num = -(c03 * s + c13 * t)
    v_num = c02 * s + c12 * t
    keep = (u_num % d23 == 0) & (v_num % d23 == 0)
    u = u_num // d23
    v = v_num // d23
    keep &= (u >= 0) & (v >= 0) & (u <= B * B) & (v <= B * B)
    if x0 == 0:
        keep[0] = False
    x1, u, v = x1[keep], u[keep], v[keep]
    x2 = np.rint(np.sqrt(u.astype(np.float64))).astype(np.int64)
    x3 = np.rint(np.sqrt(v.astype(np.float64))).astype(np.int64)
    square = (x2 * x2 == u) & (x3 * x3 == v)
    return [
        (x0, int(a), int(b), int(c))
        for a, b, c in zip(x1[square], x2[square], x3[square])
    ]


def enumerate_orbits(a, b, B, x0_values):
    """
    Non-negative solutions (x0, x1, x2, x3) with gcd 1 for the given x0
    values. Eliminating x2^2 and x3^2 with the minor d23 gives
    d23 x2^2 = -(d03 x0^2 + d13 x1^2) and d23 x3^2 = d02 x0^2 + d12 x1^2.
    """
    sixtuple = plucker(DiagonalPencil(a, b))
    c02, c03, c12, c13, d23 = (
        sixtuple.minor(0, 2),
        sixtuple.minor(0, 3),
        sixtuple.minor(1, 2),
        sixtuple.minor(1, 3),
        sixtuple.minor(2, 3),
    )
    largest = max(abs(c02), abs(c03), abs(c12), abs(c13), abs(d23))
    fast = (
        4 * largest * (B + 1) ** 2 < INT64_SAFE
        and (B + 1) ** 2 < FLOAT_EXACT_SQRT
    )
    sweep = _squares_numpy if fast else _squares_python

    orbits = []
    for x0 in x0_values:
        for x in sweep(x0, B, c03, c13, c02, c12, d23):
            if math.gcd(*x) == 1:
                orbits.append(x)
    return orbits


def _x0_slices(B, workers):
    values = list(range(B + 1))
    n_slices = max(1, min(workers, len(values)))
    return [values[i::n_slices] for i in range(n_slices)]


def enumerate_points(
    c,
    B,
    workers=WORKERS_DEFAULT,
    memory_budget_mb=MEMORY_BUDGET_MB_DEFAULT,
):
    """
    All rational points of height at most B on a nonsingular diagonal
    pencil, sorted lexicographically.
    :param c: DiagonalPencil
    :param B: Height bound (>= 1)
    :param workers: Number of processes sweeping x0 values
    :param memory_budget_mb: Abort before starting if the estimate exceeds
    this
    :return list: ProjectivePoint objects
    """
    B = int(B)
    if B < 1:
        raise ValueError(f"Height bound must be at least 1, got {B}")
    require_nonsingular(c)

    needed = estimate_enumeration_bytes(B, workers)
    if needed > memory_budget_mb * 1024 ** 2:
        raise ResourceError(
            f"Enumerating up to B={B} needs about {needed / 1024 ** 2:.1f} "
            f"MB, over the budget of {memory_budget_mb} MB"
        )

    logger.info(f"Enumerating points of height at most {B} on {c.label()}")
    tasks = [
        dask.delayed(enumerate_orbits)(c.a, c.b, B, x0_values)
        for x0_values in _x0_slices(B, workers)
    ]
    if workers > 1:
        results = dask.compute(
            *tasks, scheduler="processes", num_workers=workers
        )
    else:
        results = dask.compute(*tasks, scheduler="synchronous")

    coordinates = set()
    for orbits in results:
        for x in orbits:
            coordinates.update(sign_orbit(x))

    points = [ProjectivePoint(x) for x in sorted(coordinates)]
    logger.debug(f"Found {len(points)} points")
    return points


def count_points(c, B, **kwargs):
    """N(B): the number of rational points of height at most B."""
    return len(enumerate_points(c, B, **kwargs))
