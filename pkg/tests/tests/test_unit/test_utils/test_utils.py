import math
from fractions import Fraction
from pathlib import Path

import jsonschema
import pytest

from pencil_points.config import SUBCOMMANDS
from pencil_points.utils import (
    JSON_SAFE_INT,
    dumps,
    fraction_string,
    json_value,
    load_json,
    load_schema,
    save_json,
)


def test_json_value():
    assert json_value(5) == 5
    assert json_value(JSON_SAFE_INT) == str(JSON_SAFE_INT)
    assert json_value(-(3 ** 40)) == str(-(3 ** 40))
    assert json_value(Fraction(2025, 16)) == "2025/16"
    assert json_value(Fraction(4, 2)) == 2
    assert json_value(math.inf) == "infinite"
    assert json_value(float("nan")) is None
    assert json_value(True) is True
    assert json_value({1: (1, 2)}) == {"1": [1, 2]}


def test_fraction_string():
    assert fraction_string(Fraction(-9, 16)) == "-9/16"
    assert fraction_string(7) == "7"


def test_dumps_sorted():
    assert dumps({"b": 1, "a": Fraction(1, 2)}) == '{"a": "1/2", "b": 1}'


def test_save_json(tmpdir):
    filename = Path(tmpdir) / "record.json"
    save_json({"det": 2 ** 60}, filename)
    assert load_json(filename) == {"det": str(2 ** 60)}
    assert filename.read_text().endswith("}\n")


@pytest.mark.parametrize("subcommand", SUBCOMMANDS)
def test_schemas_are_valid(subcommand):
    schema = load_schema(subcommand)
    jsonschema.Draft7Validator.check_schema(schema)
    assert schema["type"] == "object"
