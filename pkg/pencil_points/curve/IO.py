import json
import logging

from pencil_points.constants import CURVE_KEYS
from pencil_points.curve.pencil import DiagonalPencil
from pencil_points.exceptions import ConfigurationError

logger = logging.getLogger(__name__)


def parse_coefficients(text, name="coefficients"):
    """
    Parse "a0,a1,a2,a3" (or a JSON list) into four Python integers.
    Integers are parsed from their decimal strings, so any size is kept.
    """
    if isinstance(text, str):
        items = [item.strip() for item in text.split(",")]
    else:
        items = list(text)
    if any(isinstance(item, float) for item in items):
        raise ConfigurationError(f"{name} must be integers, got {text!r}")
    try:
        values = tuple(int(item) for item in items)
    except (TypeError, ValueError):
        raise ConfigurationError(
            f"Could not read {name} {text!r} as four integers"
        )
    if len(values) != 4:
        raise ConfigurationError(
            f"{name} needs four integers, got {len(values)}: {text!r}"
        )
    return values


def curve_from_dict(record):
    missing = [key for key in CURVE_KEYS if key not in record]
    if missing:
        raise ConfigurationError(f"Curve record is missing keys {missing}")
    a, b = (parse_coefficients(record[key], key) for key in CURVE_KEYS)
    return DiagonalPencil(a, b)


def curve_to_dict(c):
    return {"a": list(c.a), "b": list(c.b)}


def load_curve(filename):
    logger.info(f"Loading curve from: {filename}")
    try:
        with open(filename) as f:
            record = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise ConfigurationError(f"Could not read curve file {filename}: {e}")
    return curve_from_dict(record)


def save_curve(c, filename):
    with open(filename, "w") as f:
        json.dump(curve_to_dict(c), f)
