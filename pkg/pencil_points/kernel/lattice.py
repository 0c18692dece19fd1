"""
Integer row lattices in Z^n: saturation and Hermite normal form.

Every routine works on numpy object arrays so entries stay Python integers.
"""

import numpy as np
from sympy.core.intfunc import igcdex

from pencil_points.exceptions import DegeneratePencilError


def exgcd(a, b):
    """
    2x2 integer matrix M of determinant 1 with M @ [a, b] = [g, 0], where
    g = gcd(a, b) >= 0. If a and b are both 0, M is the identity.
    """
    a = int(a)
    b = int(b)
    if a == 0 and b == 0:
        return np.eye(2, dtype=object)
    # a | b must leave the first column untouched, or diagonal_form can cycle
    if a != 0 and b % a == 0:
        if a > 0:
            return np.array([[1, 0], [-b // a, 1]], dtype=object)
        return np.array([[-1, 0], [b // a, -1]], dtype=object)
    s, t, g = igcdex(a, b)
    s, t, g = int(s), int(t), int(g)
    if g < 0:
        s, t, g = -s, -t, -g
    return np.array([[s, t], [-b // g, a // g]], dtype=object)


def inv_2x2_det1(m):
    """Matrix inverse of a 2x2 matrix with determinant 1."""
    assert m.shape == (2, 2) and m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0] == 1
    return np.array([[m[1, 1], -m[0, 1]], [-m[1, 0], m[0, 0]]], dtype=object)


def _clear_row(d, t, i):
    if (d[i, i + 1 :] == 0).all():
        return False
    for j in range(i + 1, d.shape[1]):
        m = exgcd(d[i, i], d[i, j]).T
        d[:, [i, j]] = d[:, [i, j]] @ m
        t[[i, j]] = inv_2x2_det1(m) @ t[[i, j]]
    return True


def _clear_col(d, i):
    if (d[i + 1 :, i] == 0).all():
        return False
    for j in range(i + 1, d.shape[0]):
        m = exgcd(d[i, i], d[j, i])
        d[[i, j]] = m @ d[[i, j]]
    return True


def diagonal_form(rows):
    """
    Reduce an integer matrix A to U @ A = D @ T with U, T unimodular and D
    diagonal. U is not tracked: the row lattice of A is the row lattice of
    D @ T, which is all the callers need.
    :param rows: Integer matrix (list of rows or 2D array)
    :return: (D, T) as object arrays
    """
    d = np.array(rows, dtype=object)
    t = np.eye(d.shape[1], dtype=object)
    for i in range(min(*d.shape)):
        _clear_col(d, i)
        while True:
            if not _clear_row(d, t, i):
                break
            if not _clear_col(d, i):
                break
    return d, t


def saturate(rows):
    """
    Basis of (row span over Q) intersected with Z^n, as an object array with
    one row per nonzero diagonal entry.
    """
    d, t = diagonal_form(rows)
    nonzero = [i for i in range(min(*d.shape)) if d[i, i] != 0]
    return t[nonzero]


def row_hermite_form(rows):
    """
    Row Hermite normal form: positive pivots, zeros below each pivot and
    entries above each pivot reduced into [0, pivot). Zero rows are dropped.
    """
    h = np.array(rows, dtype=object)
    n_rows, n_cols = h.shape
    pivot_row = 0
    for col in range(n_cols):
        if pivot_row == n_rows:
            break
        for r in range(pivot_row + 1, n_rows):
            if h[r, col] != 0:
                m = exgcd(h[pivot_row, col], h[r, col])
                h[[pivot_row, r]] = m @ h[[pivot_row, r]]
        pivot = h[pivot_row, col]
        if pivot == 0:
            continue
        if pivot < 0:
            h[pivot_row] = -h[pivot_row]
            pivot = -pivot
        for r in range(pivot_row):
            h[r] = h[r] - (h[r, col] // pivot) * h[pivot_row]
        pivot_row += 1
    return h[:pivot_row]


def minors_rank2(u, v):
    return tuple(
        int(u[i]) * int(v[j]) - int(u[j]) * int(v[i])
        for i in range(len(u))
        for j in range(i + 1, len(u))
    )


def hnf_rank2(rows):
    """
    Saturate the rank 2 lattice spanned by two integer quadruples and return
    the Hermite normal form basis of the saturation.
    :param rows: Two integer quadruples
    :return: Two integer quadruples whose 2x2 minors have gcd 1
    """
    rows = [tuple(int(v) for v in row) for row in rows]
    if len(rows) != 2 or any(len(row) != 4 for row in rows):
        raise ValueError("hnf_rank2 takes exactly two quadruples")
    if not any(minors_rank2(*rows)):
        raise DegeneratePencilError(
            f"Rows {rows[0]} and {rows[1]} are proportional"
        )

    basis = row_hermite_form(saturate(rows))
    return tuple(tuple(int(v) for v in row) for row in basis)


def orthogonal_lattice(u, v):
    """
    Hermite normal form basis of the integer vectors w in Z^4 with
    u.w = v.w = 0, for independent quadruples u and v. The kernel is
    spanned over Q by the four vectors obtained by leaving out one index
    and taking alternating 2x2 minors of the other three.
    """
    pairs = [(i, j) for i in range(4) for j in range(i + 1, 4)]
    m = dict(zip(pairs, minors_rank2(u, v)))
    if not any(m.values()):
        raise DegeneratePencilError(
            f"{tuple(u)} and {tuple(v)} are proportional"
        )
    spanning = []
    for omitted in range(4):
        i, j, k = [t for t in range(4) if t != omitted]
        w = [0] * 4
        w[i], w[j], w[k] = m[(j, k)], -m[(i, k)], m[(i, j)]
        spanning.append(w)
    basis = row_hermite_form(saturate(spanning))
    assert len(basis) == 2
    return tuple(tuple(int(x) for x in row) for row in basis)


def _dot(u, v):
    return sum(int(a) * int(b) for a, b in zip(u, v))


def gauss_reduce(u, v):
    """
    Lagrange-Gauss reduction of a rank 2 lattice basis: returns a basis
    (u, v) of the same lattice with |u| <= |v| and |<u, v>| <= |u|^2 / 2,
    so u is a shortest nonzero vector. Each vector has its first nonzero
    entry positive.
    """
    u = [int(a) for a in u]
    v = [int(a) for a in v]
    if _dot(u, u) > _dot(v, v):
        u, v = v, u
    while True:
        norm = _dot(u, u)
        if norm == 0:
            raise DegeneratePencilError("Zero vector in a lattice basis")
        q = (2 * _dot(u, v) + norm) // (2 * norm)
        v = [b - q * a for a, b in zip(u, v)]
        if _dot(v, v) >= norm:
            break
        u, v = v, u

    def positive(w):
        leading = next(a for a in w if a != 0)
        return tuple(w) if leading > 0 else tuple(-a for a in w)

    return positive(u), positive(v)
