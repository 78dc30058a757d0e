"""Layered settings: CLI overrides, environment, ./partlog.toml, user config, defaults."""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Mapping

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from partlog_numeric.rigor import PrecisionPolicy

from .paths import UserDirs

logger = logging.getLogger(__name__)

PROJECT_CONFIG_FILE = "partlog.toml"
DEFAULT_CACHE_PATH = "./partlog-cache.txt"
OUTPUT_FORMATS = ("text", "json", "csv")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")

_DEFAULTS: dict[str, str] = {
    "cache_path": DEFAULT_CACHE_PATH,
    "use_cache": "true",
    "prec_init": "96",
    "prec_max": "16384",
    "escalation": "2",
    "jobs": "1",
    "output_format": "text",
    "log_level": "WARNING",
}
_ENV_KEY_MAP: dict[str, str] = {
    "cache_path": "PARTLOG_CACHE",
    "prec_init": "PARTLOG_PREC_INIT",
    "prec_max": "PARTLOG_PREC_MAX",
    "jobs": "PARTLOG_JOBS",
    "output_format": "PARTLOG_FORMAT",
    "log_level": "PARTLOG_LOG_LEVEL",
}
_TRUE = {"1", "true", "yes", "on"}
_FALSE = {"0", "false", "no", "off"}


class ConfigError(ValueError):
    """Raised when a resolved setting cannot be interpreted."""


def _load_config_from_file(path: Path) -> dict[str, str]:
    if not path.is_file():
        return {}
    try:
        with path.open("rb") as handle:
            data = tomllib.load(handle)
    except (OSError, tomllib.TOMLDecodeError) as exc:
        logger.warning("ignoring unreadable config %s: %s", path, exc)
        return {}
    section = data.get("partlog", data)
    if not isinstance(section, dict):
        return {}
    return {key: _as_text(value) for key, value in section.items() if not isinstance(value, dict)}


def _as_text(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


@dataclass(frozen=True)
class Settings:
    """Resolved run configuration shared by every command."""

    cache_path: Path = Path(DEFAULT_CACHE_PATH)
    use_cache: bool = True
    prec_init: int = 96
    prec_max: int = 16384
    escalation: int = 2
    jobs: int = 1
    output_format: str = "text"
    log_level: str = "WARNING"

    def __post_init__(self) -> None:
        if self.prec_init < 2:
            raise ConfigError(f"prec_init must be at least 2 bits, got {self.prec_init}")
        if self.prec_init > self.prec_max:
            raise ConfigError(f"prec_init ({self.prec_init}) exceeds prec_max ({self.prec_max})")
        if self.escalation < 2:
            raise ConfigError(f"escalation must be at least 2, got {self.escalation}")
        if self.jobs < 1:
            raise ConfigError(f"jobs must be >= 1, got {self.jobs}")
        if self.output_format not in OUTPUT_FORMATS:
            raise ConfigError(f"unknown output format {self.output_format!r}; expected one of {OUTPUT_FORMATS}")
        if self.log_level not in LOG_LEVELS:
            raise ConfigError(f"unknown log level {self.log_level!r}; expected one of {LOG_LEVELS}")

    def policy(self) -> PrecisionPolicy:
        return PrecisionPolicy(self.prec_init, self.prec_max, self.escalation)


@dataclass
class SettingsResolver:
    """Resolve each key by walking the configuration layers in priority order."""

    cli_overrides: Mapping[str, str | None] = field(default_factory=dict)
    env: Mapping[str, str] | None = None
    project_dir: Path | None = None
    user_dirs: UserDirs | None = None
    defaults: Mapping[str, str] | None = None

    def __post_init__(self) -> None:
        self.env = self.env if self.env is not None else os.environ
        self.project_dir = self.project_dir or Path.cwd()
        self.user_dirs = self.user_dirs or UserDirs()
        merged = dict(_DEFAULTS)
        merged.update(self.defaults or {})
        self.defaults = merged
        self._project_layer: dict[str, str] | None = None
        self._user_layer: dict[str, str] | None = None

    # ---------- Public API ----------

    def resolve_setting(self, key: str) -> str | None:
        if (value := self.cli_overrides.get(key)) is not None:
            return value
        if value := self._env_value(key):
            return value
        if value := self.project_layer().get(key):
            return value
        if value := self.user_layer().get(key):
            return value
        return self.defaults.get(key)

    def resolve(self) -> Settings:
        values = {key: self.resolve_setting(key) for key in _DEFAULTS}
        return Settings(
            cache_path=Path(str(values["cache_path"])).expanduser(),
            use_cache=_parse_bool("use_cache", values["use_cache"]),
            prec_init=_parse_int("prec_init", values["prec_init"]),
            prec_max=_parse_int("prec_max", values["prec_max"]),
            escalation=_parse_int("escalation", values["escalation"]),
            jobs=_parse_int("jobs", values["jobs"]),
            output_format=str(values["output_format"]).lower(),
            log_level=str(values["log_level"]).upper(),
        )

    def project_layer(self) -> dict[str, str]:
        if self._project_layer is None:
            self._project_layer = _load_config_from_file(self.project_dir / PROJECT_CONFIG_FILE)
        return self._project_layer

    def user_layer(self) -> dict[str, str]:
        if self._user_layer is None:
            self._user_layer = _load_config_from_file(self.user_dirs.config_file())
        return self._user_layer

    # ---------- Internal helpers ----------

    def _env_value(self, key: str) -> str | None:
        alias = _ENV_KEY_MAP.get(key)
        if alias is None:
            return None
        return self.env.get(alias) or None


def _parse_int(key: str, raw: str | None) -> int:
    try:
        return int(str(raw).strip())
    except ValueError:
        raise ConfigError(f"{key} must be an integer, got {raw!r}") from None


def _parse_bool(key: str, raw: str | None) -> bool:
    text = str(raw).strip().lower()
    if text in _TRUE:
        return True
    if text in _FALSE:
        return False
    raise ConfigError(f"{key} must be a boolean, got {raw!r}")
