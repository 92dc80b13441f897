"""Configuration management for sleecc.

Values come from the first config file found (explicit path, the shipped
``config.yaml``, ``~/.sleecc/config.yaml``, ``./config.yaml``). CLI flags
override them.
"""

import logging
import os
from pathlib import Path
from typing import Any, Iterable, Optional

import yaml

from sleecc.errors import ConfigError

logger = logging.getLogger(__name__)

_DEFAULT_CONFIG_PATHS = [
    Path(__file__).parent.parent / "config.yaml",
    Path.home() / ".sleecc" / "config.yaml",
    Path("config.yaml"),
]

ENGINES = ("auto", "sat", "horn")
OUTPUTS = ("human", "json")
NO_COLOR_ENV = "SLEECC_NO_COLOR"


def _read_yaml(path: Path) -> dict:
    with open(path, encoding="utf-8") as f:
        data = yaml.safe_load(f)
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise ConfigError(f"{path}: top level must be a mapping, got {type(data).__name__}")
    logger.debug("loaded configuration from %s", path)
    return data


class Config:
    """Global configuration singleton for sleecc.

    ``Config()`` returns the current instance; ``Config(path)`` replaces it
    with one loaded from ``path``.
    """

    _instance: Optional["Config"] = None
    _data: dict

    def __new__(cls, config_path: Optional[str] = None):
        if cls._instance is None or config_path is not None:
            cls._instance = super().__new__(cls)
            cls._instance._data = cls._load(config_path)
        return cls._instance

    @staticmethod
    def _load(config_path: Optional[str] = None) -> dict:
        candidates: Iterable[Path] = _DEFAULT_CONFIG_PATHS
        if config_path and os.path.isfile(config_path):
            candidates = [Path(config_path)]
        for p in candidates:
            if p.is_file():
                return _read_yaml(p)
        return {}

    def get(self, key: str, default: Any = None) -> Any:
        """Value at a dot-notation key such as ``export.scaffold_constant``."""
        val: Any = self._data
        for k in key.split("."):
            if not isinstance(val, dict) or val.get(k) is None:
                return default
            val = val[k]
        return val

    def set(self, key: str, value: Any):
        *parents, last = key.split(".")
        d = self._data
        for k in parents:
            d = d.setdefault(k, {})
        d[last] = value

    def _choice(self, key: str, choices, default: str) -> str:
        value = self.get(key, default)
        if value not in choices:
            logger.warning("ignoring %s=%r (expected one of %s)", key, value, ", ".join(choices))
            return default
        return value

    @property
    def engine(self) -> str:
        return self._choice("engine", ENGINES, "auto")

    @property
    def output(self) -> str:
        return self._choice("output", OUTPUTS, "human")

    @property
    def color(self) -> bool:
        if os.environ.get(NO_COLOR_ENV):
            return False
        return bool(self.get("color", True))

    @property
    def bruteforce_max_atoms(self) -> int:
        return int(self.get("bruteforce.max_atoms", 20))

    @property
    def scaffold_constant(self) -> str:
        return str(self.get("export.scaffold_constant", "someoneelse"))

    @property
    def message_template(self) -> str:
        return str(self.get("export.message_template", "I have the obligation {atom}"))

    @property
    def log_level(self) -> str:
        return str(self.get("logging.level", "WARNING")).upper()

    def reload(self, config_path: Optional[str] = None):
        """Reload configuration from file."""
        self._data = self._load(config_path)
