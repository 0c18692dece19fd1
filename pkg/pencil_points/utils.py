# Small serialisation utils
import json
import math
from fractions import Fraction
from pathlib import Path

from pencil_points.constants import INFINITE_STRING

# Integers beyond this are written as decimal strings
JSON_SAFE_INT = 2 ** 53
SCHEMA_DIRECTORY = Path(__file__).parent / "schemas"


def json_value(value):
    """
    Make exact values JSON safe: big integers and fractions become decimal
    strings, an infinite exponent becomes "infinite".
    """
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return value if abs(value) < JSON_SAFE_INT else str(value)
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return json_value(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, float):
        if math.isinf(value):
            return INFINITE_STRING
        if math.isnan(value):
            return None
        return value
    if isinstance(value, dict):
        return {str(k): json_value(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [json_value(v) for v in value]
    return str(value)


def dumps(record):
    return json.dumps(json_value(record), sort_keys=True)


def save_json(record, filename):
    with open(filename, "w", newline="\n") as f:
        f.write(dumps(record) + "\n")


def load_json(filename):
    with open(filename) as f:
        return json.load(f)


def fraction_string(value):
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def load_schema(subcommand):
    """The JSON schema documenting the output of one subcommand."""
    return load_json(SCHEMA_DIRECTORY / f"{subcommand}.json")
