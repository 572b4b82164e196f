"""
Tests for application settings
"""
from polycensus.core.config import Settings


def test_defaults():
    config = Settings(_env_file=None)
    assert config.DEFAULT_SEED == 20170101
    assert config.MC_MIN_TRIALS == 100
    assert config.OUTPUT_FORMAT == "csv"
    assert not hasattr(config, "DEBUG")


def test_unknown_variables_ignored(monkeypatch):
    monkeypatch.setenv("DEBUG", "True")
    config = Settings(_env_file=None)
    assert "DEBUG" not in config.model_dump()


def test_worker_count(monkeypatch):
    assert Settings(_env_file=None, WORKERS=3).worker_count() == 3
    monkeypatch.setattr("polycensus.core.config.os.cpu_count", lambda: None)
    assert Settings(_env_file=None, WORKERS=0).worker_count() == 1
