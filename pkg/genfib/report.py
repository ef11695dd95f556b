"""Report container and plain/json/csv rendering.

Exact rationals are written as "num/den" strings (integral ones as "n"),
field elements as {"a", "b", "D"}. Floats appear only where an operation is
numeric by nature (arctan residuals).
"""

from __future__ import annotations

import csv
import dataclasses
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional, Sequence

from genfib.errors import DomainError
from genfib.exact import QuadRat


def format_value(value: Any) -> str:
    """Plain-text form of a scalar: exact rationals never floated."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(value, QuadRat):
        return str(value)
    if value is None:
        return "-"
    return str(value)


def to_jsonable(value: Any) -> Any:
    if isinstance(value, bool) or value is None or isinstance(value, (int, str, float)):
        return value
    if isinstance(value, Fraction):
        return format_value(value)
    if isinstance(value, QuadRat):
        return {"a": format_value(value.a), "b": format_value(value.b), "D": value.D}
    if hasattr(value, "_asdict"):
        return {k: to_jsonable(v) for k, v in value._asdict().items()}
    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        return {f.name: to_jsonable(getattr(value, f.name)) for f in dataclasses.fields(value)}
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    raise DomainError(f"report: cannot serialize {type(value).__name__}")


@dataclass
class Report:
    """One command's result.

    `payload` is the full machine-readable result; `headers`/`rows` the table
    used by plain and csv output; `lines` free text printed before the table.
    """

    command: str
    params: dict
    payload: Any
    summary: dict = field(default_factory=dict)
    elapsed_ms: Optional[float] = None
    headers: Sequence[str] = ()
    rows: Sequence[Sequence[Any]] = ()
    lines: Sequence[str] = ()
    unexpected: bool = False
    plain_table: bool = True

    def as_dict(self) -> dict:
        return {
            "command": self.command,
            "params": to_jsonable(self.params),
            "payload": to_jsonable(self.payload),
            "summary": to_jsonable(self.summary),
            "elapsed_ms": self.elapsed_ms,
        }


def _aligned(headers: Sequence[str], rows: Sequence[Sequence[Any]]) -> list[str]:
    cells = [[format_value(v) for v in row] for row in rows]
    table = ([list(headers)] if headers else []) + cells
    widths = [max(len(r[i]) for r in table if i < len(r)) for i in range(max(len(r) for r in table))]
    return ["  ".join(c.rjust(widths[i]) for i, c in enumerate(r)).rstrip() for r in table]


def render_plain(report: Report) -> str:
    out = list(report.lines)
    if report.rows and report.plain_table:
        out.extend(_aligned(report.headers, report.rows))
    for key, value in report.summary.items():
        if key == "line":
            out.append(str(value))
        else:
            out.append(f"{key}: {format_value(value)}")
    if report.elapsed_ms is not None:
        out.append(f"elapsed_ms: {report.elapsed_ms:.1f}")
    return "\n".join(out) + "\n"


def render_json(report: Report) -> str:
    return json.dumps(report.as_dict(), indent=2, ensure_ascii=False) + "\n"


def render_csv(report: Report) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if report.headers:
        writer.writerow(report.headers)
    for row in report.rows:
        writer.writerow([format_value(v) for v in row])
    if report.summary:
        writer.writerow([])
        for key, value in report.summary.items():
            writer.writerow([key, format_value(value)])
    return buf.getvalue()


RENDERERS = {"plain": render_plain, "json": render_json, "csv": render_csv}


def render(report: Report, fmt: str = "plain") -> str:
    renderer = RENDERERS.get(fmt)
    if renderer is None:
        raise DomainError(f"render: unknown format '{fmt}' (expected plain, json or csv)")
    return renderer(report)
