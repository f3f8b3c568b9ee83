"""Scan orchestration: dimension loop, worker pool, ledger, and resume.

A scan walks every dimension in [n_min, n_max], runs the vectorized kernel
(staged or brute), promotes every kernel hit to a full exact per-candidate
analysis, and aggregates the records into a :class:`ScanReport`.

Persistence layout (all derived from the output path P):

* ``P``           — the final report in the requested format;
* ``P.parts/``    — one JSON file per completed dimension (records + counts);
* ``P.ledger``    — append-only completion markers, one line per dimension:
  ``done n=<n> records=<count> checksum=<sha256 hex>``.

The ledger enables resume: completed dimensions are loaded from their part
files (verified against the ledger checksum) instead of being recomputed, so
an interrupted scan finishes with a report byte-identical to an
uninterrupted one.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import re
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .candidates import DesignCandidate, cardinality_bounds
from .fastscan import DimensionScan, scan_dimension_brute, scan_dimension_staged
from .pipeline import full_candidate_analysis
from .records import ScanReport, SieveRecord, Stage
from .report import write_report
from .spectrum import PrecisionPolicy

__all__ = ["scan", "check", "scan_dimension", "resume_ledger", "LedgerError"]

log = logging.getLogger("designsieve")

_LEDGER_LINE = re.compile(r"^done n=(\d+) records=(\d+) checksum=([0-9a-f]{64})$")


class LedgerError(RuntimeError):
    """A resume ledger or part file is corrupted."""


def _records_checksum(records: list[SieveRecord]) -> str:
    h = hashlib.sha256()
    for r in records:
        h.update(r.to_json_line().encode())
        h.update(b"\n")
    return h.hexdigest()


def scan_dimension(
    n: int,
    mode: str = "staged",
    policy: PrecisionPolicy | None = None,
    enable_k_factorization: bool = False,
) -> tuple[dict, list[SieveRecord]]:
    """Scan one dimension; return per-stage counts and candidate records."""
    if mode == "staged":
        ds: DimensionScan = scan_dimension_staged(n)
    elif mode == "brute":
        ds = scan_dimension_brute(n)
    else:
        raise ValueError(f"unknown scan mode {mode!r}")
    interesting = sorted(set(ds.xyzt_pass) | set(ds.nozaki_pass) | set(ds.degenerate))
    records = [
        full_candidate_analysis(
            DesignCandidate(n, M), policy, enable_k_factorization
        )
        for M in interesting
    ]
    counts = {
        "candidates_total": ds.candidates_total,
        "coarse_passed": ds.coarse_passed,
        "fine_passed": ds.fine_passed,
        "xyzt_passed": sum(1 for r in records if r.xyzt_integer),
        "nozaki_passed": sum(1 for r in records if r.nozaki_integer),
        "spectrum_refuted": sum(
            1 for r in records if r.stage is Stage.SPECTRUM_ANALYSIS
        ),
        "survivors": sum(1 for r in records if r.stage is Stage.SURVIVOR),
    }
    return counts, records


def resume_ledger(output_path: str | Path) -> set[int]:
    """Completed dimensions recorded in the ledger for ``output_path``.

    Raises :class:`LedgerError` naming the offending line when the ledger is
    corrupted (malformed lines are never silently skipped).
    """
    ledger = Path(str(output_path) + ".ledger")
    done: set[int] = set()
    if not ledger.exists():
        return done
    with ledger.open() as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line:
                continue
            m = _LEDGER_LINE.match(line)
            if not m:
                raise LedgerError(
                    f"{ledger}: corrupted ledger line {lineno}: {line!r}"
                )
            done.add(int(m.group(1)))
    return done


def _part_path(output_path: Path, n: int) -> Path:
    return Path(str(output_path) + ".parts") / f"n={n}.json"


def _ledger_entries(output_path: Path) -> dict[int, tuple[int, str]]:
    entries: dict[int, tuple[int, str]] = {}
    ledger = Path(str(output_path) + ".ledger")
    if not ledger.exists():
        return entries
    with ledger.open() as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line:
                continue
            m = _LEDGER_LINE.match(line)
            if not m:
                raise LedgerError(
                    f"{ledger}: corrupted ledger line {lineno}: {line!r}"
                )
            entries[int(m.group(1))] = (int(m.group(2)), m.group(3))
    return entries


def _load_part(output_path: Path, n: int, expected: tuple[int, str]) -> tuple[dict, list[SieveRecord]]:
    part = _part_path(output_path, n)
    if not part.exists():
        raise LedgerError(f"ledger marks n={n} done but {part} is missing")
    data = json.loads(part.read_text())
    records = [SieveRecord.from_json_dict(d) for d in data["records"]]
    count, checksum = expected
    if len(records) != count or _records_checksum(records) != checksum:
        raise LedgerError(f"{part}: contents do not match the ledger checksum")
    return data["counts"], records


def _store_part(
    output_path: Path, n: int, counts: dict, records: list[SieveRecord]
) -> None:
    part = _part_path(output_path, n)
    part.parent.mkdir(parents=True, exist_ok=True)
    tmp = part.with_name(part.name + ".tmp")
    tmp.write_text(
        json.dumps({"n": n, "counts": counts, "records": [r.to_json_dict() for r in records]})
    )
    os.replace(tmp, part)
    ledger = Path(str(output_path) + ".ledger")
    with ledger.open("a") as fh:
        fh.write(
            f"done n={n} records={len(records)} "
            f"checksum={_records_checksum(records)}\n"
        )
        fh.flush()
        os.fsync(fh.fileno())


def _worker(args) -> tuple[int, dict, list[SieveRecord]]:
    n, mode, policy, enable_k = args
    counts, records = scan_dimension(n, mode, policy, enable_k)
    return n, counts, records


def scan(
    n_min: int,
    n_max: int,
    mode: str = "staged",
    policy: PrecisionPolicy | None = None,
    output_path: str | Path | None = None,
    output_format: str = "jsonl",
    jobs: int = 1,
    resume: bool = False,
    enable_k_factorization: bool = False,
) -> ScanReport:
    """Scan all dimensions in [n_min, n_max]; returns the aggregate report.

    With ``output_path`` set, the report is written there (in
    ``output_format``) together with a resumable per-dimension ledger; with
    ``resume=True``, dimensions already marked complete are loaded back
    instead of recomputed.
    """
    if not (3 <= n_min <= n_max):
        raise ValueError(
            f"need 3 <= n_min <= n_max, got n_min={n_min}, n_max={n_max}"
        )
    if mode not in ("staged", "brute"):
        raise ValueError(f"unknown scan mode {mode!r}")
    policy = policy or PrecisionPolicy()
    out = Path(output_path) if output_path is not None else None

    done: dict[int, tuple[int, str]] = {}
    if out is not None and resume:
        done = _ledger_entries(out)

    report = ScanReport(n_min=n_min, n_max=n_max, mode=mode)
    per_dim: dict[int, tuple[dict, list[SieveRecord]]] = {}

    pending: list[int] = []
    for n in range(n_min, n_max + 1):
        if n in done:
            per_dim[n] = _load_part(out, n, done[n])
            log.info("n=%d loaded from ledger (%d records)", n, len(per_dim[n][1]))
        else:
            pending.append(n)

    def finish(n: int, counts: dict, records: list[SieveRecord]) -> None:
        per_dim[n] = (counts, records)
        if out is not None:
            _store_part(out, n, counts, records)
        log.info(
            "n=%d done: %d candidates, %d records, %d survivors",
            n,
            counts["candidates_total"],
            len(records),
            counts["survivors"],
        )

    if jobs > 1 and len(pending) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            args = [(n, mode, policy, enable_k_factorization) for n in pending]
            for n, counts, records in pool.map(_worker, args):
                finish(n, counts, records)
    else:
        for n in pending:
            counts, records = scan_dimension(
                n, mode, policy, enable_k_factorization
            )
            finish(n, counts, records)

    for n in range(n_min, n_max + 1):
        counts, records = per_dim[n]
        report.candidates_total += counts["candidates_total"]
        report.coarse_passed += counts["coarse_passed"]
        report.fine_passed += counts["fine_passed"]
        report.xyzt_passed += counts["xyzt_passed"]
        report.nozaki_passed += counts["nozaki_passed"]
        report.spectrum_refuted += counts["spectrum_refuted"]
        report.survivors += counts["survivors"]
        report.records.extend(records)

    report.records.sort(key=lambda r: (r.n, r.M))
    if out is not None:
        write_report(report.records, output_format, out, report)
    return report


def check(
    n: int,
    M: int,
    policy: PrecisionPolicy | None = None,
    enable_k_factorization: bool = False,
) -> SieveRecord:
    """Run the full staged pipeline on a single candidate pair.

    Raises :class:`designsieve.candidates.CandidateError` (or its
    :class:`designsieve.candidates.TightBoundError` subclass) when the pair
    is outside the admissible cardinality window.
    """
    return full_candidate_analysis(
        DesignCandidate(n, M), policy, enable_k_factorization
    )
