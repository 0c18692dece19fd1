"""
Points of the curve and of its Jacobian over prime fields.

Counting uses a table sq[v] = #{y in F_p : y^2 = v} so every count is a
single vectorised pass over F_p.
"""

import itertools
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from pencil_points.curve.jacobian import weierstrass
from pencil_points.curve.pencil import primitive_reduce, plucker
from pencil_points.curve.reduction import is_good_prime
from pencil_points.exceptions import BadPrimeError, ResourceError
from pencil_points.kernel.arithmetic import is_prime

MAX_TABLE_PRIME = 2 ** 31


@dataclass(frozen=True, order=True)
class FpPoint:
    """Point of P^3(F_p), scaled so its first nonzero coordinate is 1."""

    p: int
    coords: Tuple[int, int, int, int]

    def __post_init__(self):
        coords = tuple(int(v) % self.p for v in self.coords)
        leading = next((v for v in coords if v), None)
        if leading != 1:
            raise ValueError(f"{coords} is not normalised mod {self.p}")
        object.__setattr__(self, "coords", coords)


def normalise_mod_p(x, p):
    residues = [int(v) % p for v in x]
    leading = next((v for v in residues if v), None)
    if leading is None:
        raise ValueError(f"{tuple(x)} reduces to zero mod {p}")
    inverse = pow(leading, -1, p)
    return FpPoint(p, tuple(v * inverse % p for v in residues))


def require_good_prime(c, p):
    if not is_good_prime(c, p):
        raise BadPrimeError(f"{p} is not a prime of good reduction for "
                            f"{c.label()}")


def reduce_mod_p(point, p, c=None):
    """
    Reduction of a rational point to P^3(F_p). gcd(x) = 1 guarantees a unit
    coordinate, so the reduction is always defined.
    :param point: ProjectivePoint (or integer quadruple)
    :param p: Prime
    :param c: If given, p must be a good prime of this pencil
    :return FpPoint:
    """
    p = int(p)
    if c is not None:
        require_good_prime(c, p)
    elif not is_prime(p):
        raise BadPrimeError(f"{p} is not prime")
    return normalise_mod_p(tuple(point), p)


def square_counts(p):
    """sq[v] = number of y in F_p with y^2 = v."""
    if p >= MAX_TABLE_PRIME:
        raise ResourceError(f"p={p} is too large for table counting")
    y = np.arange(p, dtype=np.int64)
    sq = np.zeros(p, dtype=np.int64)
    np.add.at(sq, y * y % p, 1)
    return sq


def _chart_coefficients(model, p):
    """
    On the curve, d23 x2^2 = -(d03 x0^2 + d13 x1^2) and
    d23 x3^2 = d02 x0^2 + d12 x1^2. Returns the four coefficients divided by
    d23 mod p: x2^2 = u0 x0^2 + u1 x1^2, x3^2 = v0 x0^2 + v1 x1^2.
    """
    d = plucker(model)
    inverse = pow(d.minor(2, 3) % p, -1, p)
    u0 = -d.minor(0, 3) * inverse % p
    u1 = -d.minor(1, 3) * inverse % p
    v0 = d.minor(0, 2) * inverse % p
    v1 = d.minor(1, 2) * inverse % p
    return u0, u1, v0, v1


def count_fp(c, p):
    """
    n_p = #C(F_p) for a good prime p, from the primitive model. Points have
    x0 = 1, or x0 = 0 and x1 = 1; no point has x0 = x1 = 0 because d23 is
    a unit.
    """
    p = int(p)
    require_good_prime(c, p)
    u0, u1, v0, v1 = _chart_coefficients(primitive_reduce(c), p)
    sq = square_counts(p)

    x1 = np.arange(p, dtype=np.int64)
    t = x1 * x1 % p
    u = (u0 + u1 * t) % p
    v = (v0 + v1 * t) % p
    affine = int(np.sum(sq[u] * sq[v]))
    at_x0_zero = int(sq[u1] * sq[v1])
    return affine + at_x0_zero


def fp_points(c, p):
    """Every point of C(F_p), sorted."""
    p = int(p)
    require_good_prime(c, p)
    u0, u1, v0, v1 = _chart_coefficients(primitive_reduce(c), p)
    roots = {}
    for y in range(p):
        roots.setdefault(y * y % p, []).append(y)

    found = []
    for x0, x1 in [(1, x1) for x1 in range(p)] + [(0, 1)]:
        u = (u0 * x0 + u1 * x1 * x1) % p
        v = (v0 * x0 + v1 * x1 * x1) % p
        for x2, x3 in itertools.product(roots.get(u, []), roots.get(v, [])):
            found.append(FpPoint(p, (x0, x1, x2, x3)))
    return sorted(found)


def singular_fp_points(c, p):
    """
    Points of the reduction of c mod p where the gradients of q and r are
    proportional (Jacobian criterion), by exhaustive search over P^3(F_p).
    """
    p = int(p)
    a = [v % p for v in c.a]
    b = [v % p for v in c.b]
    singular = []
    for lead in range(4):
        for tail in itertools.product(range(p), repeat=3 - lead):
            x = (0,) * lead + (1,) + tail
            squares = [v * v for v in x]
            if sum(ai * s for ai, s in zip(a, squares)) % p:
                continue
            if sum(bi * s for bi, s in zip(b, squares)) % p:
                continue
            grad_q = [ai * v for ai, v in zip(a, x)]
            grad_r = [bi * v for bi, v in zip(b, x)]
            if all(
                (grad_q[i] * grad_r[j] - grad_q[j] * grad_r[i]) % p == 0
                for i in range(4)
                for j in range(i + 1, 4)
            ):
                singular.append(FpPoint(p, x))
    return singular


def hasse_check(n_p, p):
    """|n_p - (p + 1)| <= 2 sqrt(p), in integers."""
    return (int(n_p) - int(p) - 1) ** 2 <= 4 * int(p)


def count_weierstrass(model, p):
    """
    #E(F_p) for y^2 = x^3 + A x + B with p > 3, point at infinity included.
    """
    p = int(p)
    if p <= 3:
        raise ValueError("Short Weierstrass counting needs p > 3")
    sq = square_counts(p)
    x = np.arange(p, dtype=np.int64)
    x_cubed = x * x % p * x % p
    f = (x_cubed + (model.A % p) * x + model.B % p) % p
    return 1 + int(np.sum(sq[f]))


def count_quartic(quartic, p):
    """
    Points on y^2 = f(lam, mu) over P^1(F_p) for an odd prime p: one affine
    chart mu = 1 and the points above mu = 0.
    """
    p = int(p)
    e4, e3, e2, e1, e0 = (v % p for v in quartic)
    sq = square_counts(p)
    lam = np.arange(p, dtype=np.int64)
    f = e4
    for coefficient in (e3, e2, e1, e0):
        f = (f * lam + coefficient) % p
    return int(np.sum(sq[f])) + int(sq[e4])


def jacobian_point_count(c, p):
    """
    #Jac(C)(F_p), independent of count_fp: the short Weierstrass model for
    p > 3 and the quartic model for p = 3.
    """
    p = int(p)
    require_good_prime(c, p)
    model = weierstrass(primitive_reduce(c))
    if p > 3:
        return count_weierstrass(model, p)
    return count_quartic(model.quartic, p)
