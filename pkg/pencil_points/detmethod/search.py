"""
Search for primitive nonsingular pencils with many small rational points,
and run every certificate on what is found.

"through_points" builds the unique diagonal pencil through two points with
small coordinates: (a_i) and (b_i) span the integer kernel of the 2x4 matrix
of squared coordinates. "random" samples coefficient pairs from the box.
"""

import itertools
import logging
import math
from dataclasses import dataclass
from typing import Tuple

import dask
import numpy as np

from pencil_points.constants import (
    K_DEFAULT,
    SEARCH_B_DEFAULT,
    SEARCH_MIN_POINTS_DEFAULT,
    SEARCH_PRIMES,
    SEARCH_RADIUS_DEFAULT,
    WORKERS_DEFAULT,
)
from pencil_points.curve.pencil import (
    DiagonalPencil,
    height,
    is_nonsingular,
    is_primitive,
)
from pencil_points.curve.reduction import is_good_prime
from pencil_points.detmethod.certificates import (
    class_divisibility,
    height_divisibility,
)
from pencil_points.detmethod.matrices import eval_matrix
from pencil_points.exceptions import ResourceError
from pencil_points.kernel.lattice import (
    gauss_reduce,
    minors_rank2,
    orthogonal_lattice,
)
from pencil_points.kernel.linalg import matrix_rank
from pencil_points.points.classes import partition_classes
from pencil_points.points.rational import enumerate_points

logger = logging.getLogger(__name__)

STRATEGIES = ("through_points", "random")
POINT_RANGE_DEFAULT = 3
RANDOM_SAMPLES_DEFAULT = 2000


@dataclass(frozen=True)
class SearchCandidate:
    curve: DiagonalPencil
    height: int
    points: Tuple

    @property
    def n_points(self):
        return len(self.points)

    def sort_key(self):
        return (-self.n_points, self.height, self.curve.a, self.curve.b)


def pencil_through(x, y):
    """
    The primitive diagonal pencil through two points whose squared
    coordinates are independent, or None.
    """
    squares = [[int(v) ** 2 for v in x], [int(v) ** 2 for v in y]]
    if not any(minors_rank2(*squares)):
        return None
    a, b = gauss_reduce(*orthogonal_lattice(*squares))
    return DiagonalPencil(a, b)


def _in_box(c, radius):
    return max(abs(v) for v in c.a + c.b) <= radius


def _orbit_representatives(point_range):
    return [
        x
        for x in itertools.product(range(point_range + 1), repeat=4)
        if any(x) and math.gcd(*x) == 1
    ]


def through_points_candidates(radius, point_range=POINT_RANGE_DEFAULT):
    """Distinct primitive nonsingular pencils in the box through two
    points with coordinates in [0, point_range]."""
    found = set()
    for x, y in itertools.combinations(
        _orbit_representatives(point_range), 2
    ):
        c = pencil_through(x, y)
        if c is None or not _in_box(c, radius) or not is_nonsingular(c):
            continue
        found.add((c.a, c.b))
    return sorted(found)


def random_candidates(radius, n_samples=RANDOM_SAMPLES_DEFAULT, seed=0):
    rng = np.random.default_rng(seed)
    found = set()
    for _ in range(n_samples):
        coefficients = rng.integers(-radius, radius + 1, size=8)
        a = tuple(int(v) for v in coefficients[:4])
        b = tuple(int(v) for v in coefficients[4:])
        if not any(minors_rank2(a, b)):
            continue
        c = DiagonalPencil(a, b)
        if is_nonsingular(c) and is_primitive(c):
            found.add((a, b))
    return sorted(found)


def _evaluate_candidates(pairs, B, min_points):
    results = []
    for a, b in pairs:
        c = DiagonalPencil(a, b)
        points = enumerate_points(c, B)
        if len(points) >= min_points:
            results.append(SearchCandidate(c, height(c), tuple(points)))
    return results


def scan_box(
    radius=SEARCH_RADIUS_DEFAULT,
    B=SEARCH_B_DEFAULT,
    min_points=SEARCH_MIN_POINTS_DEFAULT,
    strategy="through_points",
    workers=WORKERS_DEFAULT,
    point_range=POINT_RANGE_DEFAULT,
    n_samples=RANDOM_SAMPLES_DEFAULT,
    seed=0,
):
    """
    Primitive nonsingular pencils with coefficients in [-radius, radius]
    and at least min_points points of height <= B.
    :return list: SearchCandidate, most points first
    """
    if strategy == "through_points":
        pairs = through_points_candidates(radius, point_range)
    elif strategy == "random":
        pairs = random_candidates(radius, n_samples, seed)
    else:
        raise ValueError(f"Unknown search strategy {strategy!r}")
    logger.info(f"Checking {len(pairs)} candidate pencils up to B={B}")

    n_chunks = max(1, min(workers, len(pairs)))
    tasks = [
        dask.delayed(_evaluate_candidates)(pairs[i::n_chunks], B, min_points)
        for i in range(n_chunks)
    ]
    if workers > 1:
        chunks = dask.compute(
            *tasks, scheduler="processes", num_workers=workers
        )
    else:
        chunks = dask.compute(*tasks, scheduler="synchronous")

    candidates = [candidate for chunk in chunks for candidate in chunk]
    return sorted(candidates, key=SearchCandidate.sort_key)


def same_class_subsets(c, points, primes=SEARCH_PRIMES, min_size=2):
    """(p, class key, members) for every residue class with at least
    min_size points, over the good primes among primes."""
    subsets = []
    for p in primes:
        if not is_good_prime(c, p):
            continue
        partition = partition_classes(c, points, p)
        for key, members in partition.same_class_groups(min_size):
            subsets.append((p, key, members))
    return subsets


def independent_rows(c, points, k):
    """
    Greedily pick points whose evaluation rows are independent, stopping at
    8k. Gives a full rank square matrix when the points allow one.
    """
    chosen = []
    rank = 0
    for point in points:
        trial = chosen + [point]
        trial_rank = matrix_rank(eval_matrix(c, trial, k).entries)
        if trial_rank > rank:
            chosen, rank = trial, trial_rank
        if len(chosen) == 8 * k:
            break
    return chosen


def class_certificates(c, points, k=K_DEFAULT, primes=SEARCH_PRIMES):
    """
    One class certificate per same-class subset. A subset keeps at most
    its first 8k points, and one whose maximal minors are still too many
    to check is skipped.
    """
    certificates = []
    for p, key, members in same_class_subsets(c, points, primes):
        members = members[: 8 * k]
        try:
            certificates.append(
                class_divisibility(eval_matrix(c, members, k), p, c)
            )
        except ResourceError as e:
            logger.info(
                f"Skipping the class of {key} mod {p} ({len(members)} "
                f"points): {e}"
            )
    return certificates


def certify_curve(c, points, k=K_DEFAULT, primes=SEARCH_PRIMES):
    """
    Height certificates for the first 8k points and for an independent
    8k-subset, plus class certificates for every same-class subset.
    """
    certificates = []
    points = list(points)
    if len(points) >= 8 * k:
        certificates.append(height_divisibility(c, points[: 8 * k], k))
        chosen = independent_rows(c, points, k)
        if len(chosen) == 8 * k:
            certificates.append(height_divisibility(c, chosen, k))
    certificates.extend(class_certificates(c, points, k, primes))
    return certificates
