from pencil_points.constants import PAIRS
from pencil_points.curve.pencil import plucker
from pencil_points.exceptions import TheoremViolationError


def complementary_pair(i, j):
    return tuple(t for t in range(4) if t not in (i, j))


def grassmann_check(c, P, Q):
    """
    For rational points P = (x_i), Q = (y_i) on a primitive pencil, find the
    single integer lambda >= 0 with
    |x_k^2 y_l^2 - x_l^2 y_k^2| = lambda |d_ij| for each split
    {i, j, k, l} = {0, 1, 2, 3}.
    :return int: lambda
    """
    x = tuple(int(v) for v in P)
    y = tuple(int(v) for v in Q)
    for point in (x, y):
        if not c.contains(point):
            raise ValueError(f"{point} is not on {c.label()}")

    sixtuple = plucker(c)
    lam = None
    for i, j in PAIRS:
        k, l = complementary_pair(i, j)
        lhs = abs(x[k] ** 2 * y[l] ** 2 - x[l] ** 2 * y[k] ** 2)
        d = abs(sixtuple.minor(i, j))
        if d == 0:
            if lhs != 0:
                break
            continue
        if lhs % d:
            break
        if lam is None:
            lam = lhs // d
        elif lam != lhs // d:
            break
    else:
        return 0 if lam is None else lam

    raise TheoremViolationError(
        f"No single lambda relates the square minors of {x}, {y} to the "
        f"minors {sixtuple.as_dict()} of {c.label()}"
    )
