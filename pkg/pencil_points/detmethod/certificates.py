import itertools
import math
from dataclasses import dataclass

from pencil_points.curve.pencil import height, is_primitive
from pencil_points.exceptions import ResourceError
from pencil_points.detmethod.matrices import eval_matrix
from pencil_points.kernel.arithmetic import valuation
from pencil_points.kernel.linalg import det_exact
from pencil_points.points.finite_field import reduce_mod_p, require_good_prime

MAX_MINORS = 20000


@dataclass(frozen=True)
class DivisibilityCertificate:
    """
    base^required must divide the determinant; observed is the exponent
    actually found (math.inf when the determinant is 0).
    """

    kind: str
    base: int
    required: int
    observed: object
    determinant: int

    @property
    def verified(self):
        return self.observed >= self.required

    def as_dict(self):
        return {
            "kind": self.kind,
            "base": self.base,
            "required": self.required,
            "observed": self.observed,
            "det": str(self.determinant),
            "verified": self.verified,
        }


def hadamard_bound(k, B):
    """(8k)^(4k) B^(16k^2): Hadamard's bound for an 8k x 8k matrix M_2k."""
    return (8 * k) ** (4 * k) * B ** (16 * k * k)


def _require_square(M):
    if not M.is_square:
        rows, cols = M.entries.shape
        raise ValueError(f"Need a square matrix, got {rows}x{cols}")


def hadamard_certificate(M, B):
    """
    True iff |det M| <= (8k)^(4k) B^(16k^2). Holds for every correctly
    evaluated matrix; a False means the evaluation pipeline is broken.
    """
    _require_square(M)
    for point in M.points:
        if max(abs(int(v)) for v in point) > B:
            raise ValueError(f"Point {tuple(point)} has height above {B}")
    return abs(det_exact(M.entries)) <= hadamard_bound(M.k, B)


def hadamard_record(M, B):
    _require_square(M)
    determinant = det_exact(M.entries)
    bound = hadamard_bound(M.k, B)
    return {
        "kind": "hadamard",
        "base": B,
        "bound": str(bound),
        "det": str(determinant),
        "verified": abs(determinant) <= bound,
    }


def maximal_minors(matrix):
    """Every maximal square submatrix, as lists of rows."""
    rows, cols = matrix.shape
    size = min(rows, cols)
    if rows <= cols:
        selections = itertools.combinations(range(cols), size)
        if math.comb(cols, size) > MAX_MINORS:
            raise ResourceError(f"Too many {size}x{size} minors to check")
        for chosen in selections:
            yield [[row[j] for j in chosen] for row in matrix.entries]
    else:
        if math.comb(rows, size) > MAX_MINORS:
            raise ResourceError(f"Too many {size}x{size} minors to check")
        for chosen in itertools.combinations(range(rows), size):
            yield [matrix.entries[i] for i in chosen]


def class_exponent(size):
    """E(E-1)/2 for E points in one residue class."""
    return size * (size - 1) // 2


def aggregate_class_exponent(class_sizes):
    return sum(class_exponent(size) for size in class_sizes)


def class_divisibility(M, p, c=None):
    """
    Rows of M all reduce to the same point mod p. Every maximal minor is
    then divisible by p^(s(s-1)/2) with s = min(rows, cols); for a full
    8k x 8k matrix this is p^(4k(8k-1)).
    """
    p = int(p)
    if c is not None:
        require_good_prime(c, p)
    reductions = {reduce_mod_p(point, p) for point in M.points}
    if len(reductions) != 1:
        raise ValueError(
            f"Rows reduce to {len(reductions)} different points mod {p}"
        )

    size = min(M.entries.shape)
    observed = math.inf
    determinant = 0
    for minor in maximal_minors(M.entries):
        value = det_exact(minor)
        exponent = valuation(value, p)
        if exponent < observed:
            observed = exponent
            determinant = value
    return DivisibilityCertificate(
        kind="class",
        base=p,
        required=class_exponent(size),
        observed=observed,
        determinant=determinant,
    )


def partition_divisibility(M, p, c=None):
    """
    For a square M whose rows fall into several classes mod p, p divides
    det M at least sum_P E_P(E_P - 1)/2 times.
    """
    _require_square(M)
    p = int(p)
    if c is not None:
        require_good_prime(c, p)
    sizes = {}
    for point in M.points:
        key = reduce_mod_p(point, p)
        sizes[key] = sizes.get(key, 0) + 1
    determinant = det_exact(M.entries)
    return DivisibilityCertificate(
        kind="partition",
        base=p,
        required=aggregate_class_exponent(sizes.values()),
        observed=valuation(determinant, p),
        determinant=determinant,
    )


def height_exponent(determinant, base):
    """
    Largest e with base^e | determinant by repeated exact division; inf
    when the determinant is 0 or base is 1.
    """
    if determinant == 0 or base == 1:
        return math.inf
    exponent = 0
    while determinant % base == 0:
        determinant //= base
        exponent += 1
    return exponent


def height_divisibility(c, points, k):
    """
    H(C)^(4k^2 - 4k + 1) divides det M_2k for any 8k rational points on a
    primitive nonsingular pencil, evaluated on basis_s2k.
    """
    k = int(k)
    points = list(points)
    if len(points) != 8 * k:
        raise ValueError(f"Need exactly {8 * k} points, got {len(points)}")
    if not is_primitive(c):
        raise ValueError(
            f"{c.label()} is not primitive; use primitive_reduce first"
        )

    M = eval_matrix(c, points, k)
    determinant = det_exact(M.entries)
    base = height(c)
    return DivisibilityCertificate(
        kind="height",
        base=base,
        required=4 * k * k - 4 * k + 1,
        observed=height_exponent(determinant, base),
        determinant=determinant,
    )
