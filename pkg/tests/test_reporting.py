"""
Tests for report rendering
"""
import csv
import io
import json

from polycensus.core.config import settings
from polycensus.schemas.census import CheckResult
from polycensus.services import reporting
from polycensus.services.census import census_engine


def _exact(gf2):
    return census_engine.exact_probability("mutual-coprime", gf2, workers=1, m=1, degrees=(1, 1))


def test_csv_report(gf2):
    text = reporting.render([_exact(gf2)], "csv")
    rows = list(csv.DictReader(io.StringIO(text)))
    assert len(rows) == 1
    row = rows[0]
    assert row["property"] == "mutual-coprime"
    assert row["q"] == "2"
    assert row["degrees"] == "1,1"
    assert row["probability"] == "1/2"
    assert row["method"] == "exact"
    assert row["version"] == settings.APP_VERSION
    assert row["ci_low"] == ""


def test_csv_columns_are_ordered(gf2):
    header = reporting.render([_exact(gf2)], "csv").splitlines()[0].split(",")
    assert header[:3] == ["property", "field", "q"]
    assert header[-1] == "version"
    assert header.index("m") < header.index("method")


def test_json_report(gf2):
    estimate = census_engine.mc_estimate("reachable-pairs", 500, seed=1, spec=gf2, workers=1, n=1, m=1)
    document = json.loads(reporting.render([estimate], "json"))
    (row,) = document["results"]
    assert document["version"] == settings.APP_VERSION
    assert row["method"] == "mc"
    assert row["seed"] == 1
    assert row["ci_low"] <= row["ci_high"]


def test_write_report(tmp_path, gf2):
    out = tmp_path / "reports" / "census.csv"
    text = reporting.write_report([_exact(gf2)], out, "csv")
    assert out.read_text(encoding="utf-8") == text


def test_summary_line(gf2):
    line = reporting.summary_line(_exact(gf2))
    assert line.startswith("mutual-coprime: 2/4 = 1/2")
    assert "prediction" in line
    assert "error" in line


def test_render_checks():
    checks = [
        CheckResult(formula="H_{n,m}", parameters={"q": 2}, expected="6", observed="6", passed=True),
        CheckResult(formula="P_{n,m}", parameters={"q": 2}, expected="3/8", observed="1/4", passed=False),
    ]
    table = reporting.render_checks(checks)
    assert "FAIL" in table
    assert table.rstrip().endswith("1/2 checks passed")
