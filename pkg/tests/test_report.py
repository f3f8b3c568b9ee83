import csv
import io

import pytest

from designsieve.pipeline import analyze_pair
from designsieve.records import CSV_COLUMNS
from designsieve.report import render_csv, render_jsonl, render_summary, write_report


@pytest.fixture(scope="module")
def sample_records():
    return [analyze_pair(7, 196), analyze_pair(7, 169), analyze_pair(5, 77)]


def test_render_jsonl_sorted_and_deterministic(sample_records):
    out1 = render_jsonl(sample_records)
    out2 = render_jsonl(list(reversed(sample_records)))
    assert out1 == out2
    lines = out1.splitlines()
    assert len(lines) == 3
    assert lines[0].startswith('{"n":5,"m":77,')


def test_render_csv(sample_records):
    rows = list(csv.reader(io.StringIO(render_csv(sample_records))))
    assert rows[0] == CSV_COLUMNS
    assert len(rows) == 4
    assert rows[1][:2] == ["5", "77"]


def test_render_summary(sample_records):
    text = render_summary(sample_records)
    assert "no survivors" in text
    assert "records:" in text and "XYZT integer:" in text


def test_render_summary_empty():
    text = render_summary([])
    assert "no survivors" in text


def test_write_report_formats(tmp_path, sample_records):
    for fmt in ("jsonl", "csv", "summary"):
        path = tmp_path / f"out.{fmt}"
        write_report(sample_records, fmt, path)
        assert path.exists() and path.stat().st_size > 0
    with pytest.raises(ValueError):
        write_report(sample_records, "xml", tmp_path / "out.xml")
    assert not (tmp_path / "out.xml").exists()
