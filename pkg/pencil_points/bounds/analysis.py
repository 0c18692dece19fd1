import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional

import dask
import pandas as pd

from pencil_points.constants import (
    BOUND_COLUMNS,
    DELTA_DEFAULT,
    EPSILON_DEFAULT,
    M_DEFAULT,
    MEMORY_BUDGET_MB_DEFAULT,
    RANK_C_DEFAULT,
    RANK_C0_DEFAULT,
    WORKERS_DEFAULT,
)
from pencil_points.bounds.formulas import (
    cor12_bound,
    eq13_bound,
    eq14_bound,
    thm11_bound,
    thm13_bound,
    thm31_bound,
)
from pencil_points.curve.jacobian import discriminant, rank_estimate
from pencil_points.curve.pencil import height
from pencil_points.points.rational import count_points
from pencil_points.utils import fraction_string

logger = logging.getLogger(__name__)

EVALUATORS = ("thm11", "cor12", "eq13", "eq14", "thm31", "thm13")


def curve_id(c):
    a = ":".join(str(v) for v in c.a)
    b = ":".join(str(v) for v in c.b)
    return f"{a}/{b}"


@dataclass
class BoundReport:
    """
    Shape values of every bound at one B, next to the empirical N(B) when
    enumeration ran. Values are None where a bound is undefined (B < 3).
    rank_c and rank_c0 are the slope and constant of the rank estimate, and
    None when the rank was given.
    """

    curve: str
    B: int
    H: int
    absD: Fraction
    rank: float
    rank_source: str
    bounds: Dict[str, Optional[float]] = field(default_factory=dict)
    NB: Optional[int] = None
    rank_c: Optional[float] = None
    rank_c0: Optional[float] = None

    @property
    def ratios(self):
        if self.NB is None:
            return {}
        return {
            name: (self.NB / value if value else None)
            for name, value in self.bounds.items()
        }

    def as_row(self):
        row = {
            "curve": self.curve,
            "B": self.B,
            "H": self.H,
            "absD": fraction_string(self.absD),
            "rank_source": self.rank_source,
            "NB": self.NB,
        }
        row.update(self.bounds)
        return {column: row[column] for column in BOUND_COLUMNS}

    def as_dict(self):
        record = self.as_row()
        record["rank"] = self.rank
        record["rank_c"] = self.rank_c
        record["rank_c0"] = self.rank_c0
        record["ratios"] = self.ratios
        return record


def _evaluate(name, function, *args):
    try:
        return function(*args)
    except ValueError as e:
        logger.debug(f"{name} undefined: {e}")
        return None


def evaluate_bounds(B, H, rank, m=M_DEFAULT, eps=EPSILON_DEFAULT,
                    delta=DELTA_DEFAULT):
    return {
        "thm11": _evaluate("thm11", thm11_bound, B, rank, m),
        "cor12": _evaluate("cor12", cor12_bound, B, rank),
        "eq13": _evaluate("eq13", eq13_bound, B, rank),
        "eq14": _evaluate("eq14", eq14_bound, B, H, eps),
        "thm31": _evaluate("thm31", thm31_bound, B, H, eps),
        "thm13": _evaluate("thm13", thm13_bound, B, delta),
    }


def bound_report(
    c,
    B,
    rank=None,
    m=M_DEFAULT,
    eps=EPSILON_DEFAULT,
    delta=DELTA_DEFAULT,
    rank_c=RANK_C_DEFAULT,
    rank_c0=RANK_C0_DEFAULT,
    run_enumeration=True,
    memory_budget_mb=MEMORY_BUDGET_MB_DEFAULT,
):
    discD = discriminant(c)
    if rank is None:
        rank = rank_estimate(discD, rank_c, rank_c0)
        rank_source = "estimate"
        estimate_parameters = (float(rank_c), float(rank_c0))
    else:
        rank_source = "user"
        estimate_parameters = (None, None)
    H = height(c)

    return BoundReport(
        curve=curve_id(c),
        B=int(B),
        H=H,
        absD=abs(discD),
        rank=float(rank),
        rank_source=rank_source,
        bounds=evaluate_bounds(B, H, rank, m, eps, delta),
        NB=count_points(c, B, memory_budget_mb=memory_budget_mb)
        if run_enumeration
        else None,
        rank_c=estimate_parameters[0],
        rank_c0=estimate_parameters[1],
    )


def bound_table(c, B_values, workers=WORKERS_DEFAULT, **params):
    """
    One BoundReport per B, in the order given.
    :param c: Nonsingular DiagonalPencil
    :param B_values: Height bounds
    :param workers: Processes used to fill the table
    :param params: Passed to bound_report (rank, m, eps, delta, rank_c,
    rank_c0, run_enumeration, memory_budget_mb)
    :return list: BoundReport
    """
    logger.info(f"Building bound table for B in {list(B_values)}")
    tasks = [dask.delayed(bound_report)(c, B, **params) for B in B_values]
    if workers > 1:
        reports = dask.compute(
            *tasks, scheduler="processes", num_workers=workers
        )
    else:
        reports = dask.compute(*tasks, scheduler="synchronous")
    logger.info("Finished!")
    return list(reports)


def reports_to_df(reports):
    return pd.DataFrame(
        [report.as_row() for report in reports], columns=BOUND_COLUMNS
    )
