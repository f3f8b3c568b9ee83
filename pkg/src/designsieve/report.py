"""Report rendering: JSONL, CSV, and human-readable summaries.

All renderings are deterministic: records are ordered by (n, M) and contain
no timestamps; two scans of the same range produce byte-identical output.
"""

from __future__ import annotations

import csv
import io
from collections.abc import Iterable
from pathlib import Path

from .records import CSV_COLUMNS, ScanReport, SieveRecord, Stage

__all__ = ["render_jsonl", "render_csv", "render_summary", "write_report"]

FORMATS = ("jsonl", "csv", "summary")


def _sorted_records(records: Iterable[SieveRecord]) -> list[SieveRecord]:
    return sorted(records, key=lambda r: (r.n, r.M))


def render_jsonl(records: Iterable[SieveRecord]) -> str:
    return "".join(r.to_json_line() + "\n" for r in _sorted_records(records))


def render_csv(records: Iterable[SieveRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in _sorted_records(records):
        writer.writerow(r.to_csv_row())
    return buf.getvalue()


def render_summary(
    records: Iterable[SieveRecord], report: ScanReport | None = None
) -> str:
    records = _sorted_records(records)
    lines: list[str] = []
    if report is not None:
        lines.append(
            f"scan n in [{report.n_min}, {report.n_max}]  mode={report.mode}"
        )
        lines.append(f"candidates examined:     {report.candidates_total}")
        lines.append(f"passed coarse sieve:     {report.coarse_passed}")
        lines.append(f"passed fine sieve:       {report.fine_passed}")
    xyzt = [r for r in records if r.xyzt_integer]
    noz = [r for r in records if r.nozaki_integer]
    surv = [r for r in records if r.stage is Stage.SURVIVOR]
    lines.append(f"records:                 {len(records)}")
    lines.append(f"XYZT integer:            {len(xyzt)}")
    lines.append(f"k-product integer:       {len(noz)}")
    noz_only = [r for r in noz if not r.xyzt_integer]
    lines.append(f"k-product only:          {len(noz_only)}")
    multi: dict[int, int] = {}
    for r in xyzt:
        multi[r.n] = multi.get(r.n, 0) + 1
    multi = {n: c for n, c in multi.items() if c > 1}
    lines.append(f"dims with multiple XYZT: {len(multi)}")
    lines.append(f"survivors:               {len(surv)}")
    if surv:
        lines.append("SURVIVORS FOUND — exact confirmation required:")
        for r in surv:
            lines.append(f"  (n, M) = ({r.n}, {r.M})  precision {r.precision_bits} bits")
    else:
        lines.append("no survivors: every candidate refuted")
    return "\n".join(lines) + "\n"


def write_report(
    records: Iterable[SieveRecord],
    fmt: str,
    path: str | Path,
    report: ScanReport | None = None,
) -> None:
    """Write records to ``path`` in the requested format (atomic replace)."""
    if fmt not in FORMATS:
        raise ValueError(f"unknown report format {fmt!r}; expected one of {FORMATS}")
    if fmt == "jsonl":
        payload = render_jsonl(records)
    elif fmt == "csv":
        payload = render_csv(records)
    else:
        payload = render_summary(records, report)
    path = Path(path)
    tmp = path.with_name(path.name + ".tmp")
    try:
        tmp.write_text(payload)
        tmp.replace(path)
    except BaseException:
        tmp.unlink(missing_ok=True)
        raise
