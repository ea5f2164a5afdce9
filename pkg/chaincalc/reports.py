"""
JSON and CSV rendering of CLI results.
"""

import csv
import io
import json
import logging
import math
from pathlib import Path
from typing import Any, Iterable, List, Optional, Sequence

from chaincalc.data_types.flow import FlowReport
from chaincalc.data_types.norm import NormBound
from chaincalc.data_types.report import SCHEMA_VERSION, ConvergenceTable, Report

_log = logging.getLogger(__name__)

FORMATS = ("json", "csv")

Renderable = Report | ConvergenceTable | FlowReport | NormBound

REPORT_COLUMNS = ("id", "expected", "computed", "abs_err", "tol", "pass")
REFINEMENT_COLUMNS = ("intervals", "lhs", "rhs", "err", "ratio")


def _json_safe(value: Any) -> Any:
    # JSON has no inf/nan
    if isinstance(value, float) and not math.isfinite(value):
        return str(value)
    if isinstance(value, dict):
        return {str(k): _json_safe(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_safe(v) for v in value]
    return value


def to_json(result: Renderable) -> str:
    """Pretty JSON with a ``schema`` key on every document."""
    data = result.to_dict()
    if "schema" not in data:
        data = {"schema": SCHEMA_VERSION, **data}
    return json.dumps(_json_safe(data), indent=2) + "\n"


def _csv(columns: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow(["" if v is None else repr(v) if isinstance(v, float) else v for v in row])
    return buffer.getvalue()


def to_csv(result: Renderable) -> str:
    """
    One row per table row (convergence), case (reports), refinement step
    (flow) or the single bracket (norms). Floats keep full precision.
    """
    if isinstance(result, ConvergenceTable):
        return _csv(
            ConvergenceTable.COLUMNS,
            ([r.level, r.lhs, r.rhs, r.err, r.ratio, r.extrap] for r in result.rows),
        )
    if isinstance(result, Report):
        cases = sorted(result.cases, key=lambda c: c.id)
        return _csv(
            REPORT_COLUMNS,
            ([c.id, c.expected, c.computed, c.abs_err, c.tol, str(c.passed).lower()] for c in cases),
        )
    if isinstance(result, FlowReport):
        rows: List[Sequence[Any]] = [
            [r.intervals, r.lhs, r.rhs, r.err, r.ratio] for r in result.refinement
        ] or [[result.config.intervals, result.lhs, result.rhs, result.abs_err, None]]
        return _csv(REFINEMENT_COLUMNS, rows)
    return _csv(("r", "lower", "upper"), [[result.r, result.lower, result.upper]])


def render(result: Renderable, fmt: str = "json") -> str:
    if fmt == "json":
        return to_json(result)
    if fmt == "csv":
        return to_csv(result)
    raise ValueError(f"unknown format {fmt!r}, expected one of {FORMATS}")


def write_output(text: str, out: Optional[Path] = None) -> None:
    """Write to ``out`` or, without a path, to stdout."""
    if out is None:
        print(text, end="")
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text)
    _log.info("wrote %s", out)
