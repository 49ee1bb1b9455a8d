"""
Application settings and configuration paths.
"""

from pathlib import Path
from typing import Any, Optional
import os

import yaml


class Settings:
    """Application settings."""

    # Config directory (XDG compliant)
    CONFIG_DIR = Path(os.environ.get("XDG_CONFIG_HOME", Path.home() / ".config")) / "wdw"

    # User overrides
    CONFIG_FILE = CONFIG_DIR / "config.yaml"

    # Packaged defaults
    DEFAULTS_FILE = Path(__file__).with_name("defaults.yaml")

    CLIENT_VERSION = "0.1.0"

    # Environment variables
    TRUNCATION_ENV = "WDW_TRUNCATION"
    ORACLE_MAX_ENV = "WDW_ORACLE_MAX"

    def _read_yaml(self, path: Path) -> dict[str, Any]:
        if path.exists():
            try:
                with open(path) as f:
                    data = yaml.safe_load(f)
                if isinstance(data, dict):
                    return data
            except (yaml.YAMLError, IOError):
                pass
        return {}

    def _load_config(self) -> dict[str, Any]:
        """Load defaults merged with the user config file (one level deep)."""
        config = self._read_yaml(self.DEFAULTS_FILE)
        for section, values in self._read_yaml(self.CONFIG_FILE).items():
            if isinstance(values, dict) and isinstance(config.get(section), dict):
                config[section] = {**config[section], **values}
            else:
                config[section] = values
        return config

    def _get(self, section: str, key: str, default: Any) -> Any:
        value = self._load_config().get(section, {}).get(key)
        return default if value is None else value

    @staticmethod
    def _env_int(name: str) -> Optional[int]:
        raw = os.environ.get(name)
        if not raw:
            return None
        try:
            return int(raw)
        except ValueError:
            return None

    @property
    def TRUNCATION_ORDER(self) -> int:
        """Default truncation: env var > config file > default (300)."""
        env_value = self._env_int(self.TRUNCATION_ENV)
        if env_value is not None and env_value > 0:
            return env_value
        return int(self._get("series", "truncation_order", 300))

    @property
    def COEFFICIENT_ORDER(self) -> int:
        return int(self._get("series", "coefficient_order", 60))

    @property
    def ORACLE_MAX_LENGTH(self) -> int:
        """Largest walk length the oracle will enumerate."""
        env_value = self._env_int(self.ORACLE_MAX_ENV)
        if env_value is not None and env_value > 0:
            return env_value
        return int(self._get("oracle", "max_length", 16))

    @property
    def BISECTION_TOLERANCE(self) -> float:
        return float(self._get("bisection", "tolerance", 1e-7))

    @property
    def BISECTION_MAX_ITERATIONS(self) -> int:
        return int(self._get("bisection", "max_iterations", 200))

    @property
    def ROOT_TOLERANCE(self) -> float:
        return float(self._get("roots", "residual_tolerance", 1e-10))

    @property
    def ROOT_WORKING_DIGITS(self) -> int:
        return int(self._get("roots", "working_digits", 60))

    @property
    def ROOT_MAX_ITERATIONS(self) -> int:
        return int(self._get("roots", "max_iterations", 500))

    @property
    def CURVE_POINTS(self) -> int:
        return int(self._get("roots", "curve_points", 2000))

    @property
    def SAMPLER_MAX_STACK(self) -> int:
        return int(self._get("sampler", "max_stack", 1_000_000))

    @property
    def SAMPLER_EPSILON(self) -> float:
        return float(self._get("sampler", "epsilon", 0.1))


# Singleton instance
settings = Settings()
