import json

import pytest

from designsieve.candidates import CandidateError, TightBoundError
from designsieve.records import Stage
from designsieve.scan import LedgerError, check, resume_ledger, scan, scan_dimension


def test_scan_rejects_bad_ranges():
    with pytest.raises(ValueError):
        scan(10, 5)
    with pytest.raises(ValueError):
        scan(2, 10)
    with pytest.raises(ValueError):
        scan(3, 10, mode="exhaustive")


def test_scan_dimension_reference():
    counts, records = scan_dimension(7, mode="brute")
    assert counts["candidates_total"] == 126
    assert counts["xyzt_passed"] == 1
    assert counts["nozaki_passed"] == 1
    assert [(r.n, r.M) for r in records] == [(7, 196)]
    assert records[0].stage == Stage.SPECTRUM_ANALYSIS


def test_scan_small_range_no_survivors():
    report = scan(3, 20, mode="staged")
    assert report.survivors == 0
    assert report.xyzt_pairs[0] == (7, 196)
    assert all(r.refutation for r in report.records)


def test_modes_agree_on_xyzt_pairs():
    staged = scan(3, 30, mode="staged")
    brute = scan(3, 30, mode="brute")
    assert staged.xyzt_pairs == brute.xyzt_pairs
    assert staged.candidates_total == brute.candidates_total


def test_scan_writes_output_ledger_and_parts(tmp_path):
    out = tmp_path / "report.jsonl"
    report = scan(3, 12, output_path=out)
    assert out.exists()
    lines = out.read_text().splitlines()
    assert len(lines) == len(report.records)
    ledger_lines = (tmp_path / "report.jsonl.ledger").read_text().splitlines()
    assert len(ledger_lines) == 10
    assert all(l.startswith("done n=") for l in ledger_lines)
    assert resume_ledger(out) == set(range(3, 13))
    part = json.loads((tmp_path / "report.jsonl.parts" / "n=7.json").read_text())
    assert part["n"] == 7 and len(part["records"]) >= 1


def test_resume_reproduces_uninterrupted_report(tmp_path):
    full = tmp_path / "full.jsonl"
    scan(3, 25, output_path=full)

    # Simulate an interruption: keep only the first dimensions' state.
    part_dir = tmp_path / "partial.jsonl.parts"
    part_dir.mkdir()
    ledger_lines = (tmp_path / "full.jsonl.ledger").read_text().splitlines()
    keep = [l for l in ledger_lines if int(l.split()[1][2:]) <= 10]
    (tmp_path / "partial.jsonl.ledger").write_text("\n".join(keep) + "\n")
    for n in range(3, 11):
        src = tmp_path / "full.jsonl.parts" / f"n={n}.json"
        (part_dir / f"n={n}.json").write_text(src.read_text())

    scan(3, 25, output_path=tmp_path / "partial.jsonl", resume=True)
    assert (tmp_path / "partial.jsonl").read_bytes() == full.read_bytes()


def test_corrupted_ledger_reported_with_line_number(tmp_path):
    out = tmp_path / "r.jsonl"
    scan(3, 5, output_path=out)
    ledger = tmp_path / "r.jsonl.ledger"
    ledger.write_text(ledger.read_text() + "done n=six records=zero\n")
    with pytest.raises(LedgerError, match="line 4"):
        resume_ledger(out)
    with pytest.raises(LedgerError, match="line 4"):
        scan(3, 5, output_path=out, resume=True)


def test_missing_part_file_detected(tmp_path):
    out = tmp_path / "r.jsonl"
    scan(6, 8, output_path=out)
    (tmp_path / "r.jsonl.parts" / "n=7.json").unlink()
    with pytest.raises(LedgerError, match="n=7"):
        scan(6, 8, output_path=out, resume=True)


def test_parallel_scan_matches_serial(tmp_path):
    serial = tmp_path / "serial.jsonl"
    parallel = tmp_path / "parallel.jsonl"
    scan(3, 25, output_path=serial, jobs=1)
    scan(3, 25, output_path=parallel, jobs=2)
    assert parallel.read_bytes() == serial.read_bytes()


def test_check_wrapper():
    rec = check(7, 196)
    assert rec.stage == Stage.SPECTRUM_ANALYSIS
    with pytest.raises(TightBoundError):
        check(8, 240)
    with pytest.raises(CandidateError):
        check(7, 5)
