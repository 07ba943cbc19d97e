"""
Тесты конфигурации и логирования.
"""
import logging
import os
import sys
import unittest

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from app.config import Config, load_config, validate_config
from app.logger import get_logger, setup_logger


@pytest.fixture(autouse=True)
def clean_env(monkeypatch, tmp_path):
    for key in list(os.environ):
        if key.startswith("SSNPSA_") or key == "LOG_LEVEL":
            monkeypatch.delenv(key, raising=False)
    monkeypatch.chdir(tmp_path)


class TestLoadConfig:

    def test_defaults(self):
        cfg = load_config()
        assert cfg.stride == "auto"
        assert cfg.max_group_bits == 16
        assert cfg.placeholder == "?"
        assert cfg.log_level == "INFO"
        assert validate_config(cfg) == []

    def test_yaml(self, tmp_path):
        path = tmp_path / "custom.yaml"
        path.write_text(
            "index:\n  stride: 3\n  max_group_bits: 10\noracle:\n  patterns: 7\nlogging:\n  level: debug\n",
            encoding="utf-8",
        )
        cfg = load_config(config_file=str(path))
        assert cfg.stride == "3"
        assert cfg.max_group_bits == 10
        assert cfg.verify_patterns == 7
        assert cfg.log_level == "DEBUG"

    def test_default_file_in_cwd(self, tmp_path):
        (tmp_path / "config.yaml").write_text("model:\n  placeholder: '*'\n", encoding="utf-8")
        assert load_config().placeholder == "*"

    def test_env_beats_yaml(self, tmp_path, monkeypatch):
        path = tmp_path / "custom.yaml"
        path.write_text("index:\n  stride: 3\n", encoding="utf-8")
        monkeypatch.setenv("SSNPSA_STRIDE", "5")
        assert load_config(config_file=str(path)).stride == "5"

    def test_overrides_beat_env(self, monkeypatch):
        monkeypatch.setenv("SSNPSA_STRIDE", "5")
        cfg = load_config(overrides={"stride": "2", "log_level": None})
        assert cfg.stride == "2"
        assert cfg.log_level == "INFO"

    @pytest.mark.parametrize("alias,level", [("quiet", "WARNING"), ("info", "INFO"), ("DEBUG", "DEBUG")])
    def test_log_aliases(self, monkeypatch, alias, level):
        monkeypatch.setenv("LOG_LEVEL", "ERROR")
        monkeypatch.setenv("SSNPSA_LOG", alias)
        assert load_config().log_level == level

    def test_bad_integer_is_reported(self, monkeypatch):
        monkeypatch.setenv("SSNPSA_VERIFY_SEED", "seven")
        cfg = load_config()
        assert cfg.verify_seed == 0
        errors = validate_config(cfg)
        assert len(errors) == 1
        assert "verify seed" in errors[0]

    def test_broken_yaml_is_reported(self, tmp_path):
        path = tmp_path / "broken.yaml"
        path.write_text("index: {stride: 3\n", encoding="utf-8")
        cfg = load_config(config_file=str(path))
        assert cfg.stride == "auto"
        assert any("cannot parse" in e for e in validate_config(cfg))

    def test_yaml_not_a_mapping(self, tmp_path):
        path = tmp_path / "list.yaml"
        path.write_text("- 1\n- 2\n", encoding="utf-8")
        assert any("mapping" in e for e in validate_config(load_config(config_file=str(path))))

    def test_progress_flag(self, monkeypatch):
        monkeypatch.setenv("SSNPSA_PROGRESS", "off")
        assert load_config().show_progress is False


class TestValidateConfig(unittest.TestCase):

    def test_bad_stride(self):
        self.assertTrue(any("stride" in e for e in validate_config(Config(stride="0"))))
        self.assertTrue(any("stride" in e for e in validate_config(Config(stride="often"))))

    def test_placeholder(self):
        self.assertTrue(validate_config(Config(placeholder="#")))
        self.assertTrue(validate_config(Config(placeholder="??")))
        self.assertEqual(validate_config(Config(placeholder="*")), [])

    def test_group_bits(self):
        self.assertTrue(validate_config(Config(max_group_bits=0)))
        self.assertTrue(validate_config(Config(max_group_bits=17)))

    def test_log_level(self):
        self.assertTrue(validate_config(Config(log_level="LOUD")))


class TestLogger:

    def teardown_method(self):
        root = logging.getLogger("snpsa")
        for handler in root.handlers:
            handler.close()
        root.handlers.clear()

    def test_setup_once(self):
        logger = setup_logger("DEBUG")
        assert logger.level == logging.DEBUG
        handlers = list(logger.handlers)
        setup_logger("WARNING")
        assert logger.handlers == handlers
        assert logger.level == logging.WARNING

    def test_file_handler(self, tmp_path):
        logs = tmp_path / "logs"
        setup_logger("INFO", str(logs))
        get_logger("index.builder").info("hello")
        for handler in logging.getLogger("snpsa").handlers:
            handler.flush()
        assert "hello" in (logs / "snpsa.log").read_text(encoding="utf-8")

    def test_child_names(self):
        assert get_logger("oracle").name == "snpsa.oracle"
