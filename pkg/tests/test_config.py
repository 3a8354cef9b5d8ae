"""
Settings tests
Defaults, environment, config files and logging setup.
"""

import logging
import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from hilbertnorm.config import (
    DEFAULTS,
    load_config_file,
    resolve_settings,
    setup_logging,
)
from hilbertnorm.errors import ConfigError

pytestmark = pytest.mark.unit


class TestResolveSettings:
    """Test the precedence chain"""

    def test_defaults(self, monkeypatch):
        """No environment, no file, no flags"""
        monkeypatch.delenv('HNL_THREADS', raising=False)
        monkeypatch.delenv('HNL_LOG_LEVEL', raising=False)
        settings = resolve_settings()
        assert settings['threads'] == 1
        assert settings['abs_tol'] == 1e-12
        assert settings['rel_tol'] == 1e-10
        assert settings['max_subdivisions'] == 2000
        assert settings['log_level'] == DEFAULTS['log_level']

    def test_precedence(self, monkeypatch):
        """flags > file > environment"""
        monkeypatch.setenv('HNL_REL_TOL', '1e-6')
        monkeypatch.setenv('HNL_THREADS', '3')
        settings = resolve_settings({'rel_tol': '1e-7'}, {'rel_tol': 1e-8, 'threads': None})
        assert settings['rel_tol'] == 1e-8
        assert settings['threads'] == 3
        assert resolve_settings({'rel_tol': '1e-7'})['rel_tol'] == 1e-7

    def test_bad_values(self, monkeypatch):
        """Non-numeric or non-positive values"""
        monkeypatch.setenv('HNL_THREADS', 'many')
        with pytest.raises(ConfigError):
            resolve_settings()
        monkeypatch.setenv('HNL_THREADS', '0')
        with pytest.raises(ConfigError):
            resolve_settings()


class TestConfigFile:
    """Test key = value files"""

    def test_parse(self, tmp_path):
        """Comments, blanks and dashed keys"""
        path = tmp_path / "settings.conf"
        path.write_text("# comment\n\nabs-tol = 1e-11\nLOG_LEVEL=debug\n", encoding='utf-8')
        assert load_config_file(str(path)) == {'abs_tol': '1e-11', 'log_level': 'debug'}

    @pytest.mark.parametrize("body", ["threads 4\n", "speed = 3\n"])
    def test_rejects(self, tmp_path, body):
        """Missing '=' and unknown keys"""
        path = tmp_path / "settings.conf"
        path.write_text(body, encoding='utf-8')
        with pytest.raises(ConfigError):
            load_config_file(str(path))


class TestLogging:
    """Test setup_logging"""

    def test_level(self):
        """Named levels are applied to the root logger"""
        setup_logging('debug')
        assert logging.getLogger().level == logging.DEBUG
        setup_logging('WARNING')
        assert logging.getLogger().level == logging.WARNING

    def test_unknown_level(self):
        """Unknown names raise ConfigError"""
        with pytest.raises(ConfigError):
            setup_logging('chatty')
