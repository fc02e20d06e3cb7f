import json
import logging

from strongce.config import Settings, get_settings, reset_settings
from strongce.utils.logger import JsonFormatter, get_logger


def test_defaults():
    settings = Settings()
    assert settings.seed is None
    assert settings.list_size == 22
    assert settings.log_level == "INFO"
    assert settings.fallback_restarts == 20
    assert not settings.debug_checks


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("STRONGCE_SEED", "17")
    monkeypatch.setenv("STRONGCE_LOG_LEVEL", "debug")
    monkeypatch.setenv("STRONGCE_NODE_LIMIT", "500")
    monkeypatch.setenv("STRONGCE_DEBUG_CHECKS", "true")
    settings = Settings()
    assert settings.seed == 17
    assert settings.log_level == "DEBUG"
    assert settings.node_limit == 500
    assert settings.debug_checks


def test_blank_seed_counts_as_unset(monkeypatch):
    monkeypatch.setenv("STRONGCE_SEED", "  ")
    assert Settings().seed is None


def test_resolve_seed_prefers_environment(monkeypatch):
    assert Settings().resolve_seed(None) == 0
    assert Settings().resolve_seed(9) == 9
    monkeypatch.setenv("STRONGCE_SEED", "3")
    assert Settings().resolve_seed(9) == 3


def test_settings_are_cached_until_reset(monkeypatch):
    first = get_settings()
    assert get_settings() is first
    monkeypatch.setenv("STRONGCE_LIST_SIZE", "30")
    assert get_settings().list_size == 22
    reset_settings()
    assert get_settings().list_size == 30


def test_json_formatter_includes_context():
    record = logging.LogRecord("strongce.test", logging.WARNING, __file__, 1, "edge %d stuck", (4,), None)
    record.context = {"handler": "girth_six"}
    payload = json.loads(JsonFormatter().format(record))
    assert payload["logger"] == "strongce.test"
    assert payload["level"] == "WARNING"
    assert payload["message"] == "edge 4 stuck"
    assert payload["context"] == {"handler": "girth_six"}


def test_logger_writes_json_lines(monkeypatch, tmp_path):
    log_file = tmp_path / "logs" / "strongce.jsonl"
    monkeypatch.setenv("STRONGCE_LOG_FILE", str(log_file))
    reset_settings()
    logger = get_logger("test-json-file")
    assert get_logger("test-json-file") is logger
    assert len(logger.handlers) == 2
    logger.info("colored 12 edges")
    for handler in logger.handlers:
        handler.flush()
    line = log_file.read_text(encoding="utf-8").strip().splitlines()[-1]
    assert json.loads(line)["message"] == "colored 12 edges"
