"""Rendering of verdict reports and invariant rows as table, CSV or JSON."""

from __future__ import annotations

import csv
import io
import json
from typing import Dict, List, Sequence

from .errors import FormatError
from .verifier import VerdictReport

FORMATS = ("table", "csv", "json")
REPORT_COLUMNS = ("check_id", "status", "groups_checked", "violations", "notes")


def _violation_text(v: Dict[str, object]) -> str:
    head = v.get("group", v.get("claim", ""))
    rest = ", ".join(f"{k}={_compact(val)}" for k, val in v.items() if k not in ("group", "claim"))
    return f"{head}: {rest}" if head else rest


def _compact(value) -> str:
    if isinstance(value, dict):
        return "{" + ", ".join(f"{k}: {val}" for k, val in value.items()) + "}"
    return str(value)


def _table(header: Sequence[str], rows: List[List[str]]) -> str:
    widths = [len(h) for h in header]
    for row in rows:
        widths = [max(w, len(cell)) for w, cell in zip(widths, row)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip(),
             "  ".join("-" * w for w in widths)]
    for row in rows:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


def format_report(reports: Sequence[VerdictReport], fmt: str = "table") -> str:
    if fmt == "json":
        return json.dumps([r.to_dict() for r in reports], indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(REPORT_COLUMNS)
        for r in reports:
            w.writerow([r.check_id, r.status, r.groups_checked, json.dumps(r.violations), r.notes])
        return buf.getvalue()
    if fmt == "table":
        rows = []
        for r in reports:
            rows.append([r.check_id, r.status, str(r.groups_checked), str(len(r.violations)), r.notes])
            for v in r.violations:
                rows.append(["", "", "", "", "  " + _violation_text(v)])
        return _table(REPORT_COLUMNS, rows)
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def parse_report(text: str, fmt: str) -> List[VerdictReport]:
    """Inverse of :func:`format_report` for the csv and json formats."""
    try:
        if fmt == "json":
            return [VerdictReport.from_dict(d) for d in json.loads(text)]
        if fmt == "csv":
            rows = list(csv.DictReader(io.StringIO(text)))
            for row in rows:
                row["violations"] = json.loads(row["violations"])
            return [VerdictReport.from_dict(row) for row in rows]
    except (ValueError, KeyError, TypeError) as exc:
        raise FormatError(f"cannot parse {fmt} report: {exc}") from exc
    raise ValueError(f"cannot parse format {fmt!r}")


def format_rows(rows: Sequence[Dict[str, object]], fmt: str = "table") -> str:
    """Render flat records (e.g. ``InvariantRecord.to_row()``) in one of the formats."""
    if fmt == "json":
        return json.dumps(list(rows), indent=2) + "\n"
    header = list(rows[0].keys()) if rows else []
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if header:
            w.writerow(header)
        for row in rows:
            w.writerow(["" if row[k] is None else row[k] for k in header])
        return buf.getvalue()
    if fmt == "table":
        if not rows:
            return ""
        return _table(header, [["-" if row[k] is None else str(row[k]) for k in header] for row in rows])
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")
