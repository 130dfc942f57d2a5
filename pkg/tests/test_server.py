"""
Test the MCP tool functions exposed by the regext server.
"""

import pytest

from regext import server
from regext.data.corpus import REFERENCE_MODULES
from regext.tools import module_tools


@pytest.fixture
def data_dir(tmp_path, monkeypatch):
    monkeypatch.setattr(server, "DATA_DIR", tmp_path)
    monkeypatch.setattr(module_tools, "data_dir", tmp_path)
    return tmp_path


@pytest.mark.unit
def test_list_files(data_dir):
    (data_dir / "cubic.pres").write_text(REFERENCE_MODULES["twisted_cubic"]["text"])
    (data_dir / "notes.txt").write_text("ignored")
    result = server.list_files()
    assert result["total_files"] == 1
    assert result["files"][0]["name"] == "cubic.pres"


@pytest.mark.unit
def test_list_files_without_directory(tmp_path, monkeypatch):
    monkeypatch.setattr(server, "DATA_DIR", tmp_path / "absent")
    result = server.list_files()
    assert "error" in result
    assert result["files"] == []


@pytest.mark.integration
def test_tools_on_a_data_file(data_dir):
    (data_dir / "cubic.pres").write_text(REFERENCE_MODULES["twisted_cubic"]["text"])
    invariants = server.compute_invariants(file_path="cubic.pres")
    assert invariants["success"]
    assert invariants["reg"] == 1
    assert invariants["betti"]["2"] == {"3": 2}
    assert server.homological_degree(file_path="cubic.pres")["hdeg"] == 3


@pytest.mark.integration
def test_verify_with_partial_window(data_dir):
    result = server.verify_presentation(presentation=REFERENCE_MODULES["x2_xy"]["text"], window_high=3)
    assert result["success"]
    assert result["passed"]
    assert result["config"]["window_high"] == 3


@pytest.mark.unit
def test_list_reference_modules():
    result = server.list_reference_modules()
    assert result["total_modules"] == len(REFERENCE_MODULES)
