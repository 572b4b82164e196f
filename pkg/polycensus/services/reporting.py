"""
Report writers for census and Monte Carlo results
"""
import csv
import io
import json
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

from loguru import logger

from polycensus.core.config import settings
from polycensus.models.enums import OutputFormat
from polycensus.schemas.census import CensusResult, CheckResult, CoefficientFit, McEstimate

Estimate = Union[CensusResult, McEstimate]

BASE_COLUMNS = ["property", "field", "q"]
COUNT_COLUMNS = [
    "method", "total", "hits", "skipped", "probability", "formula_value", "abs_error",
    "ci_low", "ci_high", "seed", "version",
]


def _fraction_text(value) -> Optional[str]:
    return None if value is None else str(value)


def report_row(result: Estimate, seed: Optional[int] = None) -> Dict[str, Any]:
    """Flat record of one result: parameters, counts, probability and formula comparison"""
    params = result.parameters
    row: Dict[str, Any] = {"property": params.property, "field": params.field, "q": params.q}
    for key, value in params.dims.items():
        row[key] = ",".join(str(v) for v in value) if isinstance(value, (list, tuple)) else value
    if isinstance(result, McEstimate):
        row.update(
            method=result.method.value, total=result.trials, hits=result.hits,
            probability=str(result.point), ci_low=result.ci_low, ci_high=result.ci_high,
            seed=result.seed,
        )
    else:
        row.update(
            method=result.method.value, total=result.total, hits=result.hits,
            probability=str(result.probability), ci_low=None, ci_high=None, seed=seed,
        )
    row.update(
        skipped=result.skipped,
        formula_value=_fraction_text(result.formula_value),
        abs_error=_fraction_text(result.abs_error),
        version=settings.APP_VERSION,
    )
    return row


def _columns(rows: Sequence[Dict[str, Any]]) -> List[str]:
    dims: List[str] = []
    for row in rows:
        for key in row:
            if key not in BASE_COLUMNS and key not in COUNT_COLUMNS and key not in dims:
                dims.append(key)
    return BASE_COLUMNS + dims + COUNT_COLUMNS


def render_csv(rows: Sequence[Dict[str, Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=_columns(rows), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: "" if v is None else v for k, v in row.items()})
    return buffer.getvalue()


def render_json(rows: Sequence[Dict[str, Any]]) -> str:
    document = {"version": settings.APP_VERSION, "results": list(rows)}
    return json.dumps(document, indent=2, sort_keys=True) + "\n"


def render(results: Sequence[Estimate], fmt: Union[str, OutputFormat] = None, seed: Optional[int] = None) -> str:
    fmt = OutputFormat(fmt or settings.OUTPUT_FORMAT)
    rows = [report_row(r, seed=seed) for r in results]
    return render_csv(rows) if fmt == OutputFormat.CSV else render_json(rows)


def write_report(
    results: Sequence[Estimate],
    out: Optional[Union[str, Path]] = None,
    fmt: Union[str, OutputFormat] = None,
    seed: Optional[int] = None,
) -> str:
    """Render results and write them to out when given; returns the rendered text"""
    text = render(results, fmt, seed=seed)
    if out:
        path = Path(out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
        logger.info(f"Report written to {path}")
    return text


def summary_line(result: Estimate) -> str:
    """One-line human summary: probability, prediction and absolute error"""
    name = result.parameters.property
    if isinstance(result, McEstimate):
        head = f"{name}: {result.hits}/{result.trials} = {float(result.point):.6f} [{result.ci_low:.6f}, {result.ci_high:.6f}]"
    else:
        head = f"{name}: {result.hits}/{result.total} = {result.probability}"
    if result.formula_value is None:
        return head
    return f"{head}; prediction {result.formula_value}; error {result.abs_error}"


def render_checks(checks: Sequence[CheckResult]) -> str:
    """Formula-by-formula verification table"""
    lines = [f"{'formula':<28} {'parameters':<36} {'expected':>14} {'observed':>14}  status"]
    for check in checks:
        params = ", ".join(f"{k}={v}" for k, v in check.parameters.items())
        status = "ok" if check.passed else "FAIL"
        lines.append(f"{check.formula:<28} {params:<36} {check.expected:>14} {check.observed:>14}  {status}")
    passed = sum(1 for c in checks if c.passed)
    lines.append(f"{passed}/{len(checks)} checks passed")
    return "\n".join(lines) + "\n"


def render_fit(fit: CoefficientFit) -> str:
    lines = [f"{fit.name}: (1 - P) q^{fit.power} -> {fit.predicted}"]
    for point in fit.points:
        lines.append(f"  q={point.q:<4} P={float(point.probability):.6f} c(q)={float(point.defect):.4f} ({point.method.value})")
    verdict = "PASS" if fit.passed else "FAIL"
    lines.append(f"  deviation {fit.final_deviation:.4f}, tolerance {fit.tolerance:.4f}: {verdict}")
    return "\n".join(lines) + "\n"
