"""
Tests for environment-driven settings.
"""

import pytest
from pydantic import ValidationError

from regext.config import EngineSettings, load_settings


@pytest.mark.unit
def test_defaults():
    settings = load_settings()
    assert settings.seed == 0
    assert settings.prime == 32003
    assert settings.retries == 32
    assert (settings.window_low, settings.window_high) == (2, 5)
    assert settings.jobs == 1
    assert settings.log_level == "WARNING"


@pytest.mark.unit
def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("REGEXT_SEED", "17")
    monkeypatch.setenv("REGEXT_PRIME", "101")
    monkeypatch.setenv("REGEXT_JOBS", "3")
    monkeypatch.setenv("REGEXT_LOG_LEVEL", "debug")
    settings = load_settings()
    assert settings.seed == 17
    assert settings.prime == 101
    assert settings.jobs == 3
    assert settings.log_level == "DEBUG"


@pytest.mark.unit
def test_explicit_values_win_and_none_is_ignored(monkeypatch):
    monkeypatch.setenv("REGEXT_SEED", "17")
    assert load_settings(seed=4).seed == 4
    assert load_settings(seed=None, window_low=None).seed == 17
    assert load_settings(seed=None, window_low=None).window_low == 2


@pytest.mark.unit
def test_malformed_integer(monkeypatch):
    monkeypatch.setenv("REGEXT_RETRIES", "many")
    with pytest.raises(ValueError, match="REGEXT_RETRIES"):
        load_settings()


@pytest.mark.unit
@pytest.mark.parametrize("prime", [32004, 1, 2**31 + 11])
def test_prime_is_validated(prime):
    with pytest.raises(ValidationError):
        EngineSettings(prime=prime)


@pytest.mark.unit
def test_log_level_is_validated():
    assert EngineSettings(log_level="info").log_level == "INFO"
    with pytest.raises(ValidationError):
        EngineSettings(log_level="chatty")


@pytest.mark.unit
def test_snapshot_keeps_only_what_changes_reports():
    snapshot = EngineSettings(seed=5, jobs=4).snapshot()
    assert snapshot == {"seed": 5, "prime": 32003, "retries": 32, "window_low": 2, "window_high": 5}
