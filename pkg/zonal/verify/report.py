"""Serialization of reports: sorted-key JSON, CSV and a plain-text table."""

from __future__ import annotations

import csv
import io
import json
import math
import sys
from pathlib import Path
from typing import Iterable

from .schemas import ComparisonReport, Discrepancy

REPORT_COLUMNS = ["id", "closed", "mean", "mean_imag", "stderr", "n", "seed", "z", "verdict"]
DENSITY_COLUMNS = ["re", "im", "density", "empirical", "stderr"]


def dumps(payload) -> str:
    """Deterministic JSON: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(payload, sort_keys=True, indent=2, allow_nan=False) + "\n"


def reports_json(reports: Iterable[ComparisonReport]) -> str:
    return dumps([r.to_json() for r in reports])


def discrepancies_json(items: Iterable[Discrepancy]) -> str:
    return dumps([d.to_json() for d in items])


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return "" if not math.isfinite(value) else repr(value)
    return str(value)


def reports_csv(reports: Iterable[ComparisonReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(REPORT_COLUMNS)
    for r in reports:
        est = r.estimate
        writer.writerow(
            [
                _cell(v)
                for v in (
                    r.id,
                    r.closed,
                    est.mean if est else None,
                    est.mean_imag if est else None,
                    est.stderr if est else None,
                    est.n_samples if est else None,
                    est.seed if est else None,
                    r.z,
                    r.verdict,
                )
            ]
        )
    return buf.getvalue()


def density_csv(rows: list[dict]) -> str:
    """Columns ``re,im,density`` plus ``empirical,stderr`` when the rows carry them."""
    columns = [col for col in DENSITY_COLUMNS if not rows or col in rows[0]]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(row.get(col)) for col in columns])
    return buf.getvalue()


def format_table(reports: Iterable[ComparisonReport]) -> str:
    """Human-readable summary, one line per report."""
    lines = [f"{'quantity':<52} {'closed':>14} {'mean':>14} {'stderr':>10} {'z':>7}  verdict", "-" * 110]
    counts: dict[str, int] = {}
    for r in reports:
        est = r.estimate
        closed = f"{r.closed:.8g}" if r.closed is not None else "-"
        mean = f"{est.mean:.8g}" if est else "-"
        stderr = f"{est.stderr:.3g}" if est else "-"
        z = f"{r.z:.2f}" if r.z is not None else "-"
        lines.append(f"{r.id[:52]:<52} {closed:>14} {mean:>14} {stderr:>10} {z:>7}  {r.verdict}")
        counts[r.verdict] = counts.get(r.verdict, 0) + 1
    lines.append("-" * 110)
    lines.append("  ".join(f"{k}={v}" for k, v in sorted(counts.items())))
    return "\n".join(lines) + "\n"


def write_output(text: str, out: str | None) -> None:
    if out:
        path = Path(out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)
    else:
        sys.stdout.write(text)
