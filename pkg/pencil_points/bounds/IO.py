import logging

from pencil_points.constants import CSV_FLOAT_FORMAT
from pencil_points.bounds.analysis import reports_to_df
from pencil_points.utils import save_json

logger = logging.getLogger(__name__)


def bound_table_to_csv(reports):
    """Fixed column order, LF line endings, '.' decimals, empty for None."""
    return reports_to_df(reports).to_csv(
        index=False, lineterminator="\n", float_format=CSV_FLOAT_FORMAT
    )


def bound_table_to_list(reports):
    return [report.as_dict() for report in reports]


def save_bound_table(
    output_directory,
    reports,
    name="bounds",
    csv_file_extension=".csv",
    json_file_extension=".json",
):
    logger.info(f"Saving bound table to: {output_directory}")
    output_directory.mkdir(parents=True, exist_ok=True)

    with open(
        output_directory / (name + csv_file_extension), "w", newline=""
    ) as f:
        f.write(bound_table_to_csv(reports))
    save_json(
        bound_table_to_list(reports),
        output_directory / (name + json_file_extension),
    )
