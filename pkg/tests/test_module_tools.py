"""
Tests for the dictionary-returning module tools.
"""

import pytest

from regext.config import EngineSettings
from regext.data.corpus import REFERENCE_MODULES
from regext.tools import module_tools
from regext.tools.module_tools import (
    compute_ext,
    compute_invariants,
    describe_reference_modules,
    generate_corpus_files,
    homological_degree,
    initialize_module_tools,
    verify_presentation,
)

RESIDUE_FIELD = "RING 32003 x y\nREL x\nREL y\n"


@pytest.fixture(autouse=True)
def reset_module_tools(monkeypatch):
    monkeypatch.setattr(module_tools, "settings", None)
    monkeypatch.setattr(module_tools, "data_dir", None)


@pytest.mark.unit
def test_invariants_of_a_reference_module():
    result = compute_invariants(reference="x2_xy")
    assert result["success"]
    assert result["reg"] == 1
    assert result["pd"] == 2
    assert result["hdeg"] == 2
    assert result["betti"] == {"0": {"0": 1}, "1": {"2": 2}, "2": {"3": 1}}
    assert result["hilbert_function"]["1"] == 2


@pytest.mark.unit
def test_invariants_need_exactly_one_source():
    assert "error" in compute_invariants()
    assert "error" in compute_invariants(presentation=RESIDUE_FIELD, reference="x2_xy")
    assert "error" in compute_invariants(reference="no_such_module")


@pytest.mark.unit
def test_bad_presentation_is_reported():
    result = compute_invariants(presentation="RING 32003 x y\nREL x*q\n")
    assert "error" in result
    assert "q" in result["error"]


@pytest.mark.unit
def test_top_ext_of_residue_field():
    result = compute_ext(2, presentation=RESIDUE_FIELD)
    assert result["success"]
    assert result["hilbert_function"]["-2"] == 1
    assert result["indeg"] == -2
    assert result["dim"] == 0
    assert compute_ext(1, presentation=RESIDUE_FIELD)["is_zero"]


@pytest.mark.integration
def test_ext_against_a_second_module():
    result = compute_ext(1, presentation=RESIDUE_FIELD, against_presentation=RESIDUE_FIELD)
    assert result["success"]
    assert result["hilbert_function"]["-1"] == 2


@pytest.mark.unit
def test_homological_degree_breakdown():
    result = homological_degree(presentation=REFERENCE_MODULES["maximal_ideal_xy"]["text"], seed=9)
    assert result["success"]
    assert result["hdeg"] == 2
    assert result["seed"] == 9
    assert len(result["terms"]) == 1
    assert homological_degree(presentation="RING 32003 x y\nREL 1\n")["hdeg"] == 0


@pytest.mark.integration
def test_verify_presentation_passes():
    result = verify_presentation(presentation=REFERENCE_MODULES["line_xy"]["text"], seed=2, window=(1, 3))
    assert result["success"]
    assert result["passed"]
    assert result["failures"] == []
    assert result["config"]["seed"] == 2
    assert result["config"]["window_low"] == 1


@pytest.mark.unit
def test_generate_corpus_files(tmp_path):
    result = generate_corpus_files(n=2, max_deg=2, count=3, out_dir=str(tmp_path / "corpus"), seed=1)
    assert result["success"]
    assert result["total_files"] == 3
    assert sorted(path.name for path in (tmp_path / "corpus").iterdir()) == result["files"]


@pytest.mark.unit
def test_generate_corpus_rejects_large_rings(tmp_path):
    result = generate_corpus_files(n=7, max_deg=2, count=3, out_dir=str(tmp_path))
    assert "error" in result
    assert result["files"] == []


@pytest.mark.unit
def test_paths_resolve_against_the_data_directory(tmp_path):
    initialize_module_tools(tmp_path, EngineSettings(seed=3))
    (tmp_path / "line.pres").write_text(REFERENCE_MODULES["line_xy"]["text"])
    result = compute_invariants(file_path="line.pres")
    assert result["success"]
    assert result["label"] == "line"
    assert "error" in compute_invariants(file_path="missing.pres")
    written = generate_corpus_files(n=2, max_deg=2, count=2, out_dir="generated")
    assert written["seed"] == 3
    assert (tmp_path / "generated").is_dir()


@pytest.mark.unit
def test_describe_reference_modules():
    result = describe_reference_modules()
    assert result["success"]
    assert result["total_modules"] == len(REFERENCE_MODULES)
    assert result["modules"][0]["name"] == "free_xy"
