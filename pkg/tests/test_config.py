"""
Tests for configuration and logging helpers.
"""

import logging

import pytest

from qc_toolkit.utils.config import ORDER_CAP_ENV, Config
from qc_toolkit.utils.logger import Logger, LogTimer, get_logger, log_calls


@pytest.fixture
def config_file(tmp_path):
    path = tmp_path / "config.yaml"
    path.write_text(
        "engine:\n"
        "  order_cap: 500\n"
        "storage:\n"
        "  file:\n"
        "    base_path: ${QC_TEST_REPORTS}/runs\n"
        "verification:\n"
        "  orders:\n"
        "    lemmas: 300\n",
        encoding="utf-8")
    return path


def test_dotted_lookup(config_file):
    cfg = Config(str(config_file))
    assert cfg.get("verification.orders.lemmas") == 300
    assert cfg.get("verification.orders.mock", 1000) == 1000
    assert cfg.get_int("verification.orders.lemmas", 0) == 300


def test_env_substitution(monkeypatch, config_file):
    monkeypatch.setenv("QC_TEST_REPORTS", "/tmp/qc")
    cfg = Config(str(config_file))
    assert cfg.get("storage.file.base_path") == "/tmp/qc/runs"


def test_unset_env_is_left_alone(monkeypatch, config_file):
    monkeypatch.delenv("QC_TEST_REPORTS", raising=False)
    assert Config(str(config_file)).get("storage.file.base_path") == "${QC_TEST_REPORTS}/runs"


def test_order_cap(monkeypatch, config_file):
    monkeypatch.delenv(ORDER_CAP_ENV, raising=False)
    cfg = Config(str(config_file))
    assert cfg.cap_order(1000) == 500
    assert cfg.cap_order(100) == 100
    monkeypatch.setenv(ORDER_CAP_ENV, "50")
    assert cfg.cap_order(100) == 50
    monkeypatch.setenv(ORDER_CAP_ENV, "lots")
    with pytest.raises(ValueError):
        cfg.order_cap()


def test_missing_file(tmp_path, monkeypatch):
    monkeypatch.delenv(ORDER_CAP_ENV, raising=False)
    cfg = Config(str(tmp_path / "absent.yaml"))
    assert cfg.get("engine.order_cap") is None
    assert cfg.cap_order(123) == 123


def test_set(config_file):
    cfg = Config(str(config_file))
    cfg.set("cli.expand_order", 40)
    assert cfg.get_int("cli.expand_order", 20) == 40


def test_logger_level():
    logger = get_logger("qc_toolkit.tests.level")
    Logger.set_level("DEBUG")
    try:
        assert logger.level == logging.DEBUG
    finally:
        Logger.set_level("WARNING")
    assert logger.level == logging.WARNING


def test_log_timer_and_decorator():
    logger = get_logger("qc_toolkit.tests.timer")
    with LogTimer(logger, "noop") as timer:
        pass
    assert timer.millis >= 0

    @log_calls(logger)
    def double(x):
        return 2 * x

    assert double(21) == 42
    assert double.__name__ == "double"
