"""
Parsing of command-line values and JSON input files

Input files are JSON objects carrying a "field" string and one of:
    "matrix":     a polynomial matrix literal
    "matrices":   a list of polynomial matrix literals (a family to test for coprimeness)
    "generator":  a polynomial matrix literal read as a code generator
    "A", "B", "C", "D": a state-space system (C and D optional)

A polynomial matrix literal is an array of rows of low-to-high coefficient
lists, e.g. [[[0, 1], [1]], [[0], [1]]] for [[z, 1], [0, 1]].
"""
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Tuple, Union

from polycensus.core.exceptions import ParseError
from polycensus.models.field import FieldSpec
from polycensus.models.matrix import FieldMatrix
from polycensus.models.polymatrix import PolyMatrix
from polycensus.models.system import StateSpace


def parse_field(text: str) -> FieldSpec:
    return FieldSpec.parse(text)


def parse_degrees(text: str) -> Tuple[int, ...]:
    """Comma separated list of non-negative integers, e.g. "1,1,2" """
    parts = [part.strip() for part in str(text).split(",") if part.strip()]
    if not parts:
        raise ParseError(f"Empty degree list '{text}'")
    try:
        degrees = tuple(int(part) for part in parts)
    except ValueError:
        raise ParseError(f"Degree list '{text}' must contain integers")
    if any(d < 0 for d in degrees):
        raise ParseError(f"Degrees must be non-negative, got '{text}'")
    return degrees


@dataclass
class AnalysisInput:
    """A parsed input file"""
    kind: str  # matrix, family, generator, system
    field: FieldSpec
    payload: Union[PolyMatrix, List[PolyMatrix], StateSpace]


def load_document(path: Union[str, Path]) -> Dict[str, Any]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"Cannot read {path}: {e}")
    return parse_json(text)


def parse_json(text: str) -> Dict[str, Any]:
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"Invalid JSON: {e.msg}", line=e.lineno, column=e.colno)
    if not isinstance(document, dict):
        raise ParseError("Input must be a JSON object", line=1, column=1)
    return document


def _scalar_matrix(field: FieldSpec, literal: Any, name: str, rows: int = None, cols: int = None) -> FieldMatrix:
    if not isinstance(literal, list):
        raise ParseError(f"'{name}' must be an array of rows")
    matrix = FieldMatrix.from_rows(field, literal, cols=cols)
    if rows is not None and matrix.rows != rows:
        raise ParseError(f"'{name}' must have {rows} rows, got {matrix.rows}")
    return matrix


def parse_document(document: Dict[str, Any]) -> AnalysisInput:
    """Turn a decoded input document into matrices or a system"""
    if "field" not in document:
        raise ParseError("Missing 'field' entry")
    field = parse_field(str(document["field"]))

    if "matrix" in document:
        return AnalysisInput("matrix", field, PolyMatrix.from_literal(field, document["matrix"]))
    if "matrices" in document:
        family = document["matrices"]
        if not isinstance(family, list) or not family:
            raise ParseError("'matrices' must be a non-empty array of matrix literals")
        return AnalysisInput("family", field, [PolyMatrix.from_literal(field, m) for m in family])
    if "generator" in document:
        return AnalysisInput("generator", field, PolyMatrix.from_literal(field, document["generator"]))
    if "A" in document and "B" in document:
        A = _scalar_matrix(field, document["A"], "A")
        B = _scalar_matrix(field, document["B"], "B", rows=A.rows)
        if "C" in document:
            C = _scalar_matrix(field, document["C"], "C", cols=A.rows)
            D = (
                _scalar_matrix(field, document["D"], "D", rows=C.rows, cols=B.cols)
                if "D" in document
                else FieldMatrix.zeros(field, C.rows, B.cols)
            )
            return AnalysisInput("system", field, StateSpace(A, B, C, D))
        return AnalysisInput("system", field, StateSpace.from_pair(A, B))
    raise ParseError("Input needs one of 'matrix', 'matrices', 'generator' or 'A'/'B'")


def load_input(path: Union[str, Path]) -> AnalysisInput:
    return parse_document(load_document(path))
