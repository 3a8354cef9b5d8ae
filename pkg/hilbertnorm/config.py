"""
Settings and Logging
Environment-backed defaults, key=value config files and logging setup.

Values come from (highest first): CLI flags, a --config file, the
environment (a .env file is loaded on import), then the defaults below.
"""

import logging
import os
from typing import Dict, Optional

from dotenv import load_dotenv

from .errors import ConfigError

load_dotenv()

LOG_FORMAT = '%(asctime)s - %(levelname)s - %(message)s'

DEFAULTS: Dict[str, str] = {
    'threads': '1',
    'abs_tol': '1e-12',
    'rel_tol': '1e-10',
    'max_subdivisions': '2000',
    'log_level': 'INFO',
}

ENV_KEYS: Dict[str, str] = {
    'threads': 'HNL_THREADS',
    'abs_tol': 'HNL_ABS_TOL',
    'rel_tol': 'HNL_REL_TOL',
    'max_subdivisions': 'HNL_MAX_SUBDIVISIONS',
    'log_level': 'HNL_LOG_LEVEL',
}


def setup_logging(level: Optional[str] = None) -> None:
    """
    Configure root logging for CLI and script entry points

    Args:
        level: Level name; falls back to HNL_LOG_LEVEL, then INFO
    """
    name = (level or os.getenv('HNL_LOG_LEVEL', DEFAULTS['log_level'])).upper()
    numeric = getattr(logging, name, None)
    if not isinstance(numeric, int):
        raise ConfigError(f"Unknown log level: {name}")
    logging.basicConfig(level=numeric, format=LOG_FORMAT, force=True)


def load_config_file(path: str) -> Dict[str, str]:
    """
    Read a `key = value` config file

    Blank lines and lines starting with '#' are skipped.

    Args:
        path: File path

    Returns:
        Mapping of known keys to raw string values
    """
    values: Dict[str, str] = {}
    with open(path, 'r', encoding='utf-8') as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.strip()
            if not line or line.startswith('#'):
                continue
            if '=' not in line:
                raise ConfigError(f"{path}:{lineno}: expected key = value")
            key, value = (part.strip() for part in line.split('=', 1))
            key = key.lower().replace('-', '_')
            if key not in DEFAULTS:
                raise ConfigError(f"{path}:{lineno}: unknown key '{key}'")
            values[key] = value
    return values


def resolve_settings(file_values: Optional[Dict[str, str]] = None,
                     overrides: Optional[Dict[str, object]] = None) -> Dict[str, object]:
    """
    Merge defaults, environment, config file and explicit overrides

    Args:
        file_values: Parsed config file (see load_config_file)
        overrides: CLI values; None entries are ignored

    Returns:
        Typed settings dict with keys threads, abs_tol, rel_tol,
        max_subdivisions, log_level
    """
    raw: Dict[str, object] = {}
    for key, default in DEFAULTS.items():
        raw[key] = os.getenv(ENV_KEYS[key], default)
    raw.update(file_values or {})
    for key, value in (overrides or {}).items():
        if value is not None:
            raw[key] = value

    try:
        settings = {
            'threads': int(raw['threads']),
            'abs_tol': float(raw['abs_tol']),
            'rel_tol': float(raw['rel_tol']),
            'max_subdivisions': int(raw['max_subdivisions']),
            'log_level': str(raw['log_level']).upper(),
        }
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"Invalid setting value: {exc}") from exc

    if settings['threads'] < 1:
        raise ConfigError("threads must be >= 1")
    return settings
