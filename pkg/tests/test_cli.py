"""
Tests for the regext command line.
"""

import argparse
import json

import pytest

from regext.cli import EXIT_OK, EXIT_USAGE, main, parse_window
from regext.data.corpus import REFERENCE_MODULES


@pytest.fixture
def presentation_file(tmp_path):
    def write(name: str):
        path = tmp_path / f"{name}.pres"
        path.write_text(REFERENCE_MODULES[name]["text"])
        return path

    return write


@pytest.mark.unit
def test_parse_window():
    assert parse_window("1..4") == (1, 4)
    with pytest.raises(argparse.ArgumentTypeError):
        parse_window("3")
    with pytest.raises(argparse.ArgumentTypeError):
        parse_window("a..b")


@pytest.mark.unit
def test_compute_prints_json(presentation_file, capsys):
    assert main(["compute", str(presentation_file("x2_xy"))]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["label"] == "x2_xy"
    assert payload["reg"] == 1
    assert payload["hdeg"] == 2


@pytest.mark.unit
def test_ext_and_hdeg(presentation_file, capsys):
    path = str(presentation_file("residue_field_xy"))
    assert main(["ext", path, "--i", "2"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["indeg"] == -2
    assert main(["hdeg", path, "--seed", "4"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["hdeg"] == 1
    assert payload["seed"] == 4


@pytest.mark.integration
def test_verify_writes_report(presentation_file, tmp_path, capsys):
    report = tmp_path / "report.json"
    table = tmp_path / "report.csv"
    code = main(["verify", str(presentation_file("line_xy")), "--seed", "3", "--window", "1..2",
                 "--report", str(report), "--csv", str(table)])
    assert code == EXIT_OK
    document = json.loads(report.read_text())
    assert document["seed"] == 3
    assert document["config"]["window_low"] == 1
    assert document["summaries"][0]["instance_id"] == "line_xy"
    assert table.read_text().startswith("claim_id,check_id,")
    assert capsys.readouterr().out == ""


@pytest.mark.unit
@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["compute"],
        ["verify", "module.pres", "--window", "3"],
        ["frobnicate"],
    ],
)
def test_usage_errors(argv):
    assert main(argv) == EXIT_USAGE


@pytest.mark.unit
def test_missing_file(tmp_path):
    assert main(["compute", str(tmp_path / "missing.pres")]) == EXIT_USAGE


@pytest.mark.unit
def test_parse_error(tmp_path, capsys):
    path = tmp_path / "broken.pres"
    path.write_text("RING 32003 x y\nREL x*q\n")
    assert main(["compute", str(path)]) == EXIT_USAGE
    assert "q" in capsys.readouterr().err


@pytest.mark.unit
def test_malformed_environment(presentation_file, monkeypatch):
    monkeypatch.setenv("REGEXT_SEED", "seven")
    assert main(["compute", str(presentation_file("line_xy"))]) == EXIT_USAGE


@pytest.mark.unit
def test_version(capsys):
    assert main(["--version"]) == EXIT_OK
    assert capsys.readouterr().out.startswith("regext ")


@pytest.mark.unit
def test_verify_corpus_needs_files(tmp_path):
    empty = tmp_path / "empty"
    empty.mkdir()
    assert main(["verify-corpus", str(empty), "--report", str(tmp_path / "r.json")]) == EXIT_USAGE
    assert main(["verify-corpus", str(tmp_path / "nowhere"), "--report", str(tmp_path / "r.json")]) == EXIT_USAGE


@pytest.mark.slow
def test_corpus_then_verify_corpus(tmp_path, capsys):
    corpus = tmp_path / "corpus"
    assert main(["corpus", "--n", "2", "--max-deg", "2", "--count", "3", "--seed", "5", "--out", str(corpus)]) == EXIT_OK
    listing = json.loads(capsys.readouterr().out)
    assert len(listing["files"]) == 3
    report = tmp_path / "report.json"
    code = main(["verify-corpus", str(corpus), "--report", str(report), "--no-pairs"])
    document = json.loads(report.read_text())
    assert len(document["summaries"]) == 3
    assert code == EXIT_OK


@pytest.mark.integration
@pytest.mark.parametrize("name", ["line_xy", "x2_xy"])
def test_verify_exits_cleanly_on_reference_modules(presentation_file, capsys, name):
    assert main(["verify", str(presentation_file(name))]) == EXIT_OK
    document = json.loads(capsys.readouterr().out)
    assert document["reports"]
    assert all("claim_id" in report for report in document["reports"])
    assert all("check_id" in report for report in document["consistency"])
