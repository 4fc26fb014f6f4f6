"""Machine-readable result records and their canonical JSON/CSV renderings.

All report values are exact: integers, booleans, and strings only.
Rational values, should any ever reach a report, are rendered as
``"p/q"`` strings; floats are rejected outright so byte-identical
reports are guaranteed across runs.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field, is_dataclass
from fractions import Fraction

from .totient import GaussSummary

SCAN_CSV_COLUMNS = (
    "id",
    "order",
    "phi",
    "s_value",
    "subgroup_count",
    "nilpotent",
    "cyclic",
    "in_class_c",
)


@dataclass(frozen=True)
class SuiteCase:
    """One checked statement: expected versus actually computed value."""

    case_id: str
    expected: object
    actual: object

    @property
    def passed(self) -> bool:
        return self.expected == self.actual


@dataclass
class SuiteResult:
    suite_id: str
    cases: list[SuiteCase] = field(default_factory=list)
    discrepancy_notes: list[str] = field(default_factory=list)

    @property
    def all_pass(self) -> bool:
        return all(case.passed for case in self.cases)

    def failures(self) -> list[SuiteCase]:
        return [case for case in self.cases if not case.passed]

    def add(self, case_id: str, expected, actual) -> None:
        self.cases.append(SuiteCase(case_id, expected, actual))


@dataclass(frozen=True)
class ScanRow:
    """Per-group scan record; field order matches the CSV column order."""

    id: str
    order: int
    phi: int
    s_value: int
    subgroup_count: int
    nilpotent: bool
    cyclic: bool
    in_class_c: bool


@dataclass
class ScanResult:
    scanned: int = 0
    rows: list[ScanRow] = field(default_factory=list)
    gauss_class_members: list[str] = field(default_factory=list)
    nilpotent_noncyclic_members: list[str] = field(default_factory=list)
    inequality_failures: list[str] = field(default_factory=list)
    skipped: list[dict] = field(default_factory=list)

    @property
    def clean(self) -> bool:
        return not self.nilpotent_noncyclic_members and not self.inequality_failures


Report = SuiteResult | ScanResult | GaussSummary


def to_jsonable(value):
    """Recursively convert a report value into exact JSON-ready data."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, float):
        raise TypeError("reports must not contain floating-point values")
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}" if value.denominator != 1 else str(value.numerator)
    if isinstance(value, str):
        return value
    if isinstance(value, SuiteCase):
        return {
            "case_id": value.case_id,
            "expected": to_jsonable(value.expected),
            "actual": to_jsonable(value.actual),
            "pass": value.passed,
        }
    if is_dataclass(value) and not isinstance(value, type):
        if isinstance(value, SuiteResult):
            return {
                "suite_id": value.suite_id,
                "cases": [to_jsonable(c) for c in value.cases],
                "discrepancy_notes": list(value.discrepancy_notes),
                "all_pass": value.all_pass,
            }
        return {k: to_jsonable(v) for k, v in asdict(value).items()}
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    raise TypeError(f"cannot serialize {type(value).__name__} into a report")


def canonical_json(result) -> str:
    """Canonical rendering: sorted keys, fixed separators, trailing newline."""
    return json.dumps(to_jsonable(result), sort_keys=True, indent=2) + "\n"


def _bool_cell(value: bool) -> str:
    return "true" if value else "false"


def to_csv(result, summary_id: str = "group") -> str:
    """CSV rendering.  Scan results and summaries share the fixed
    group-row schema; suite results get one row per case."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if isinstance(result, ScanResult):
        writer.writerow(SCAN_CSV_COLUMNS)
        for row in result.rows:
            writer.writerow(_group_row_cells(row))
    elif isinstance(result, GaussSummary):
        writer.writerow(SCAN_CSV_COLUMNS)
        writer.writerow(
            _group_row_cells(
                ScanRow(
                    id=summary_id,
                    order=result.group_order,
                    phi=result.phi,
                    s_value=result.s_value,
                    subgroup_count=result.subgroup_count,
                    nilpotent=result.nilpotent,
                    cyclic=result.cyclic,
                    in_class_c=result.in_class_c,
                )
            )
        )
    elif isinstance(result, SuiteResult):
        writer.writerow(("suite_id", "case_id", "expected", "actual", "pass"))
        for case in result.cases:
            writer.writerow(
                (
                    result.suite_id,
                    case.case_id,
                    _cell(case.expected),
                    _cell(case.actual),
                    _bool_cell(case.passed),
                )
            )
    else:
        raise TypeError(f"cannot render {type(result).__name__} as CSV")
    return buf.getvalue()


def _group_row_cells(row: ScanRow) -> tuple:
    return (
        row.id,
        row.order,
        row.phi,
        row.s_value,
        row.subgroup_count,
        _bool_cell(row.nilpotent),
        _bool_cell(row.cyclic),
        _bool_cell(row.in_class_c),
    )


def _cell(value) -> str:
    if isinstance(value, bool):
        return _bool_cell(value)
    if isinstance(value, float):
        raise TypeError("reports must not contain floating-point values")
    return str(value)


def write_report(result, path, format: str = "json") -> None:
    """Persist a suite result, scan result, or summary as canonical JSON or CSV."""
    if format == "json":
        text = canonical_json(result)
    elif format == "csv":
        text = to_csv(result)
    else:
        raise ValueError(f"unknown report format {format!r}; expected 'json' or 'csv'")
    with open(path, "w", encoding="utf-8", newline="") as handle:
        handle.write(text)
