"""Tests for settings loading."""
from pathlib import Path

from torusrank.config import DEFAULT_TABLE1_WINDOWS, Settings, get_settings


def test_settings_from_environment(monkeypatch):
    monkeypatch.setenv("TORUSRANK_WINDOW_MAX", "2500")
    monkeypatch.setenv("TORUSRANK_LOG_LEVEL", "DEBUG")
    get_settings.cache_clear()
    settings = get_settings()
    assert settings.window_max == 2500
    assert settings.log_level == "DEBUG"
    assert settings.workers == 1


def test_settings_defaults(tmp_path):
    settings = Settings(TORUSRANK_CACHE=tmp_path / "c.jsonl", _env_file=None)
    assert settings.cache_path == tmp_path / "c.jsonl"
    assert settings.table1_windows_path == DEFAULT_TABLE1_WINDOWS
    assert isinstance(settings.table1_windows_path, Path)
