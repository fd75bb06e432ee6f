"""Command line behavior through the in-process service client."""

import json

import pytest
from click.testing import CliRunner

from intermix.cli import main

TEXT = (
    "the pilot boarded at the fairway buoy and took the wheel without a "
    "word and the master stood by the binnacle and watched the marks come "
    "on and fall away until the berth opened out between the lighters "
) * 10


@pytest.fixture()
def runner():
    return CliRunner()


@pytest.fixture()
def text_file(tmp_path):
    p = tmp_path / "doc.txt"
    p.write_text(TEXT, encoding="utf-8")
    return p


def test_analyze_prints_report_and_curve(runner, text_file):
    result = runner.invoke(main, ["analyze", str(text_file)])
    assert result.exit_code == 0, result.output
    json_part, csv_part = result.output.split("k,swaps,bytes")
    report = json.loads(json_part)
    assert report["source_id"] == str(text_file)
    assert report["chi"] > 1.0
    assert report["run_config"]["seed"] == 42
    rows = csv_part.strip().splitlines()
    assert len(rows) == 21
    assert rows[0].startswith("0,0,")


def test_analyze_curve_out_writes_csv_file(runner, text_file, tmp_path):
    curve_path = tmp_path / "curve.csv"
    result = runner.invoke(
        main, ["analyze", str(text_file), "--curve-out", str(curve_path)]
    )
    assert result.exit_code == 0, result.output
    json.loads(result.output)
    lines = curve_path.read_text(encoding="utf-8").strip().splitlines()
    assert lines[0] == "k,swaps,bytes"
    assert len(lines) == 22


def test_analyze_seed_changes_the_curve(runner, text_file):
    a = runner.invoke(main, ["analyze", str(text_file), "--seed", "1"])
    b = runner.invoke(main, ["analyze", str(text_file), "--seed", "2"])
    same = runner.invoke(main, ["analyze", str(text_file), "--seed", "1"])
    assert a.output == same.output
    assert a.output != b.output


def test_analyze_single_word_file_fails_cleanly(runner, tmp_path):
    p = tmp_path / "tiny.txt"
    p.write_text("solo", encoding="utf-8")
    result = runner.invoke(main, ["analyze", str(p)])
    assert result.exit_code == 1
    assert "needs >= 2 words" in result.output


def test_analyze_bad_encoding_suggests_flag(runner, tmp_path):
    p = tmp_path / "legacy.txt"
    p.write_bytes(b"caf\xe9 au lait " * 30)
    result = runner.invoke(main, ["analyze", str(p)])
    assert result.exit_code == 1
    assert "--encoding" in result.output
    ok = runner.invoke(main, ["analyze", str(p), "--encoding", "latin-1"])
    assert ok.exit_code == 0, ok.output


def test_analyze_missing_file_is_a_usage_error(runner):
    result = runner.invoke(main, ["analyze", "no-such-file.txt"])
    assert result.exit_code == 2


def test_curve_by_length_prints_series(runner, text_file):
    result = runner.invoke(
        main, ["curve-by-length", str(text_file), "--lengths", "400,800,1600"]
    )
    assert result.exit_code == 0, result.output
    lines = result.output.strip().splitlines()
    assert lines[0] == "length,chi"
    assert len(lines) == 4
    assert lines[1].startswith("400,")
    float(lines[1].split(",")[1])


def test_curve_by_length_rejects_garbage_lengths(runner, text_file):
    result = runner.invoke(
        main, ["curve-by-length", str(text_file), "--lengths", "four hundred"]
    )
    assert result.exit_code == 1
    assert "bad --lengths" in result.output


def test_generate_writes_files_and_manifest(runner, tmp_path):
    out_dir = tmp_path / "artificial"
    result = runner.invoke(
        main,
        [
            "generate", "--vocab-size", "200", "--symbols", "1500",
            "--seed", "3", "--count", "2", "--out-dir", str(out_dir),
        ],
    )
    assert result.exit_code == 0, result.output
    assert f"wrote 2 files to {out_dir}" in result.output
    manifest = json.loads((out_dir / "manifest.json").read_text(encoding="utf-8"))
    assert manifest["params"]["vocab_size"] == 200
    assert [f["seed"] for f in manifest["files"]] == [3, 4]
    for entry in manifest["files"]:
        content = (out_dir / entry["file"]).read_text(encoding="utf-8")
        assert len(content) == entry["symbols"]
        assert 1500 <= len(content) <= 1512


def test_generate_is_reproducible(runner, tmp_path):
    args = ["generate", "--vocab-size", "100", "--symbols", "800", "--seed", "9"]
    r1 = runner.invoke(main, args + ["--out-dir", str(tmp_path / "a")])
    r2 = runner.invoke(main, args + ["--out-dir", str(tmp_path / "b")])
    assert r1.exit_code == 0 and r2.exit_code == 0
    a = (tmp_path / "a" / "zipf-00009.txt").read_text(encoding="utf-8")
    b = (tmp_path / "b" / "zipf-00009.txt").read_text(encoding="utf-8")
    assert a == b


def test_batch_reports_directory(runner, tmp_path):
    corpus = tmp_path / "corpus"
    corpus.mkdir()
    (corpus / "long.txt").write_text(TEXT, encoding="utf-8")
    (corpus / "tiny.txt").write_text("solo", encoding="utf-8")
    (corpus / "ignored.md").write_text("not picked up", encoding="utf-8")
    result = runner.invoke(main, ["batch", str(corpus)])
    assert result.exit_code == 0, result.output
    report = json.loads(result.output)
    assert [e["source_id"] for e in report["entries"]] == ["long.txt", "tiny.txt"]
    assert report["entries"][1]["verdict"] == "skipped"
    assert report["pass_fraction"] == pytest.approx(0.5)


def test_batch_out_and_csv_files(runner, tmp_path):
    corpus = tmp_path / "corpus"
    corpus.mkdir()
    (corpus / "a.txt").write_text(TEXT, encoding="utf-8")
    (corpus / "b.txt").write_text("solo", encoding="utf-8")
    out = tmp_path / "report.json"
    csv_path = tmp_path / "report.csv"
    result = runner.invoke(
        main,
        ["batch", str(corpus), "--out", str(out), "--csv", str(csv_path)],
    )
    assert result.exit_code == 0, result.output
    report = json.loads(out.read_text(encoding="utf-8"))
    assert len(report["entries"]) == 2
    lines = csv_path.read_text(encoding="utf-8").strip().splitlines()
    assert lines[0] == "rank,source_id,chi,symbols,verdict"
    assert lines[1].startswith("1,a.txt,")
    assert lines[2].startswith(",b.txt,,4,skipped")


def test_batch_empty_directory_fails(runner, tmp_path):
    empty = tmp_path / "none"
    empty.mkdir()
    result = runner.invoke(main, ["batch", str(empty)])
    assert result.exit_code == 1
    assert "no files" in result.output


def test_batch_custom_glob(runner, tmp_path):
    corpus = tmp_path / "corpus"
    corpus.mkdir()
    (corpus / "keep.text").write_text(TEXT, encoding="utf-8")
    result = runner.invoke(main, ["batch", str(corpus), "--glob", "*.text"])
    assert result.exit_code == 0, result.output
    report = json.loads(result.output)
    assert [e["source_id"] for e in report["entries"]] == ["keep.text"]


def test_compare_summarizes_two_reports(runner, tmp_path):
    corpus = tmp_path / "corpus"
    corpus.mkdir()
    (corpus / "a.txt").write_text(TEXT, encoding="utf-8")
    report_path = tmp_path / "r.json"
    runner.invoke(main, ["batch", str(corpus), "--out", str(report_path)])
    result = runner.invoke(
        main,
        [
            "compare", "--real", str(report_path),
            "--artificial", str(report_path),
            "--large-symbol-floor", "100",
        ],
    )
    assert result.exit_code == 0, result.output
    body = json.loads(result.output)
    assert body["overlap"] == 1
    assert body["real"] == body["artificial"]


def test_version_flag(runner):
    result = runner.invoke(main, ["--version"])
    assert result.exit_code == 0
    assert "0.1.0" in result.output
