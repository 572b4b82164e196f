"""
Tests for command-line value and input file parsing
"""
import json

import pytest

from polycensus.core.exceptions import DimensionMismatchError, FieldError, ParseError
from polycensus.models.polymatrix import PolyMatrix
from polycensus.utils.parsing import load_input, parse_degrees, parse_document, parse_json


def test_parse_degrees():
    assert parse_degrees("1,1,2") == (1, 1, 2)
    assert parse_degrees(" 3 ") == (3,)


@pytest.mark.parametrize("text", ["", ",", "1,a", "1,-2"])
def test_bad_degrees(text):
    with pytest.raises(ParseError):
        parse_degrees(text)


def test_json_errors_carry_position():
    with pytest.raises(ParseError) as excinfo:
        parse_json('{"field": "2",\n "matrix": [[[1]]')
    assert excinfo.value.line == 2
    assert "line 2" in str(excinfo.value)


def test_top_level_must_be_object():
    with pytest.raises(ParseError):
        parse_json("[1, 2]")


def test_matrix_document(gf2):
    parsed = parse_document({"field": "2", "matrix": [[[0, 1], [1]], [[0], [1]]]})
    assert parsed.kind == "matrix"
    assert parsed.payload == PolyMatrix.from_literal(gf2, [[[0, 1], [1]], [[0], [1]]])


def test_family_document():
    parsed = parse_document({"field": "3", "matrices": [[[[1]]], [[[0, 1]]]]})
    assert parsed.kind == "family"
    assert len(parsed.payload) == 2
    assert parsed.field.size == 3


def test_generator_document():
    parsed = parse_document({"field": "2^2", "generator": [[[1, 1]], [[0, 1]]]})
    assert parsed.kind == "generator"
    assert parsed.field.size == 4


def test_system_documents():
    pair = parse_document({"field": "2", "A": [[0, 1], [0, 0]], "B": [[0], [1]]})
    assert pair.kind == "system"
    assert pair.payload.n == 2
    full = parse_document({"field": "2", "A": [[0]], "B": [[1]], "C": [[1]]})
    assert full.payload.D.shape == (1, 1)


@pytest.mark.parametrize("document,error", [
    ({"matrix": [[[1]]]}, ParseError),
    ({"field": "2"}, ParseError),
    ({"field": "6", "matrix": [[[1]]]}, FieldError),
    ({"field": "2", "matrices": []}, ParseError),
    ({"field": "2", "matrix": "z"}, ParseError),
    ({"field": "2", "A": [[0, 1], [0, 0]], "B": [[1]]}, ParseError),
    ({"field": "2", "A": "nope", "B": [[1]]}, ParseError),
    ({"field": "2", "A": [[0]], "B": [[1]], "C": [[1, 1]]}, DimensionMismatchError),
])
def test_bad_documents(document, error):
    with pytest.raises(error):
        parse_document(document)


def test_load_input(tmp_path):
    path = tmp_path / "identity.json"
    path.write_text(json.dumps({"field": "5", "matrix": [[[1], [0]], [[0], [1]]]}), encoding="utf-8")
    parsed = load_input(path)
    assert parsed.payload == PolyMatrix.identity(parsed.field, 2)


def test_missing_file(tmp_path):
    with pytest.raises(ParseError):
        load_input(tmp_path / "absent.json")
