# -*- coding: utf-8 -*-
"""
Configuration management for Monodromy Lab.

This module provides a singleton ConfigManager class that handles:
- User defaults for the search sub-command
- User defaults for the half-plane Monte-Carlo check
- Merging constants < config file < command-line flags
- Validating values stored with `monodromy-lab config set`

The config file never affects verification outcomes.
"""

from __future__ import annotations

import json
import logging
from typing import Any, Optional

from . import constants
from .errors import DomainError, MonodromyLabError, UnknownNameError
from .models import SearchConfig

logger = logging.getLogger(__name__)

# Keys understood in config.json, mapped to SearchConfig fields
SEARCH_KEYS: dict[str, str] = {
    'search.seed': 'seed',
    'search.max_moves': 'max_moves',
    'search.restarts': 'restarts',
    'search.time_limit': 'time_limit_seconds',
    'search.strategy': 'strategy',
    'search.workers': 'workers',
}

HPLANE_KEYS: tuple[str, ...] = ('hplane.samples', 'hplane.seed')


class ConfigManager:
    """
    Singleton class for managing user defaults.

    Attributes:
        _instance: Singleton instance
        _initialized: Whether initialization has completed
    """

    _instance: Optional['ConfigManager'] = None

    def __new__(cls) -> 'ConfigManager':
        """
        Create or return the singleton instance.

        Returns:
            The singleton ConfigManager instance.
        """
        if cls._instance is None:
            cls._instance = super().__new__(cls)
            cls._instance._initialized = False
        return cls._instance

    def __init__(self) -> None:
        """Initialize the ConfigManager if not already initialized."""
        if self._initialized:
            return

        self._initialized = True
        self._config: dict[str, Any] = {}
        self._load_config()

    def _ensure_config_dir(self) -> None:
        """Create configuration directory if it doesn't exist."""
        try:
            constants.CONFIG_DIR.mkdir(parents=True, exist_ok=True)
            logger.debug("Config directory ensured: %s", constants.CONFIG_DIR)
        except OSError as e:
            logger.error("Failed to create config directory: %s", e)

    def _load_config(self) -> None:
        """Load configuration from disk."""
        config_file = constants.CONFIG_FILE
        if not config_file.exists():
            logger.debug("No existing config file found")
            return

        try:
            content = config_file.read_text(encoding='utf-8')
            loaded = json.loads(content)
            if not isinstance(loaded, dict):
                logger.error("Config file must hold a JSON object, ignoring it")
                return
            self._config = loaded
            logger.debug("Loaded configuration with %d keys", len(self._config))
        except json.JSONDecodeError as e:
            logger.error("Invalid JSON in config file: %s", e)
            self._config = {}
        except OSError as e:
            logger.error("Failed to read config file: %s", e)
            self._config = {}

    def _save_config(self) -> None:
        """Save configuration to disk."""
        self._ensure_config_dir()
        try:
            content = json.dumps(self._config, indent=2, ensure_ascii=False)
            constants.CONFIG_FILE.write_text(content, encoding='utf-8')
            logger.debug("Saved configuration")
        except OSError as e:
            logger.error("Failed to save config file: %s", e)

    def get(self, key: str, default: Any = None) -> Any:
        """
        Get a configuration value.

        Args:
            key: Configuration key to retrieve.
            default: Default value if key not found.

        Returns:
            The configuration value or default.
        """
        return self._config.get(key, default)

    def set(self, key: str, value: Any) -> None:
        """
        Set a configuration value.

        Args:
            key: Configuration key to set.
            value: Value to store.
        """
        self._config[key] = value
        self._save_config()

    def search_defaults(self) -> dict[str, Any]:
        """
        SearchConfig fields set in the config file.

        Returns:
            Mapping of SearchConfig field names to stored values.
        """
        return {
            field_name: self._config[key]
            for key, field_name in SEARCH_KEYS.items()
            if key in self._config
        }

    def hplane_defaults(self) -> tuple[int, int]:
        """
        Monte-Carlo sample count and seed.

        Returns:
            (samples, seed), falling back to the built-in defaults.
        """
        samples = self._config.get('hplane.samples', constants.DEFAULT_MC_SAMPLES)
        seed = self._config.get('hplane.seed', constants.DEFAULT_MC_SEED)
        return int(samples), int(seed)


def search_config(**overrides: Any) -> SearchConfig:
    """
    Build a validated SearchConfig.

    Precedence is constants < config file < overrides; overrides that
    are None are ignored.

    Raises:
        DomainError: If the merged values are out of range.
    """
    values = ConfigManager().search_defaults()
    values.update({key: value for key, value in overrides.items() if value is not None})
    try:
        return SearchConfig(**values)
    except TypeError as e:
        raise MonodromyLabError(f"invalid search configuration: {e}") from e


def _number(raw: str, key: str) -> Any:
    try:
        return int(raw)
    except ValueError:
        pass
    try:
        return float(raw)
    except ValueError:
        raise DomainError(f"{key} needs a number, got '{raw}'") from None


def parse_setting(key: str, raw: str) -> Any:
    """
    Validate a command-line value for a known config key.

    Args:
        key: One of SEARCH_KEYS or HPLANE_KEYS.
        raw: Value as typed.

    Returns:
        The value to store.

    Raises:
        UnknownNameError: If the key is not known.
        DomainError: If the value is out of range for the key.
    """
    if key in SEARCH_KEYS:
        value = raw if key == 'search.strategy' else _number(raw, key)
        if key not in ('search.strategy', 'search.time_limit') and not isinstance(value, int):
            raise DomainError(f"{key} needs an integer, got '{raw}'")
        try:
            SearchConfig(**{SEARCH_KEYS[key]: value})
        except (TypeError, ValueError) as e:
            raise DomainError(f"invalid value for {key}: {e}") from None
        return value

    if key in HPLANE_KEYS:
        value = _number(raw, key)
        if not isinstance(value, int):
            raise DomainError(f"{key} needs an integer, got '{raw}'")
        if key == 'hplane.samples' and value < 1:
            raise DomainError("hplane.samples must be positive")
        if key == 'hplane.seed' and not 0 <= value <= constants.MAX_SEED:
            raise DomainError("hplane.seed must be an unsigned 64-bit integer")
        return value

    known = ', '.join((*SEARCH_KEYS, *HPLANE_KEYS))
    raise UnknownNameError(f"unknown config key '{key}', expected one of {known}")
