import logging

import pandas as pd

from pencil_points.constants import POINT_COLUMNS
from pencil_points.points.rational import ProjectivePoint
from pencil_points.utils import load_json, save_json

logger = logging.getLogger(__name__)


def points_to_df(points):
    rows = [list(point.x) + [point.height] for point in points]
    return pd.DataFrame(rows, columns=POINT_COLUMNS, dtype=object)


def points_to_csv(points):
    """CSV text with LF line endings, columns x0..x3,height."""
    return points_to_df(points).to_csv(index=False, lineterminator="\n")


def points_to_list(points):
    return [list(point.x) for point in points]


def save_points(
    output_directory,
    points,
    name="points",
    csv_file_extension=".csv",
    json_file_extension=".json",
):
    logger.info(f"Saving points to: {output_directory}")
    output_directory.mkdir(parents=True, exist_ok=True)

    save_points_csv(points, output_directory / (name + csv_file_extension))
    save_json(
        points_to_list(points),
        output_directory / (name + json_file_extension),
    )


def save_points_csv(points, filename):
    with open(filename, "w", newline="") as f:
        f.write(points_to_csv(points))


def load_points_csv(filename):
    """
    Read points back from CSV. Coordinates are read as strings and
    converted to Python integers so no precision is lost.
    """
    df = pd.read_csv(filename, dtype=str)
    return [
        ProjectivePoint(tuple(int(v) for v in row))
        for row in df[POINT_COLUMNS[:4]].itertuples(index=False)
    ]


def load_points_json(filename):
    return [
        ProjectivePoint(tuple(int(v) for v in x)) for x in load_json(filename)
    ]
