"""Per-user locations for partlog configuration."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from platformdirs import user_cache_dir, user_config_dir

_APP_NAME = "partlog"

USER_CONFIG_FILE = "config.toml"


@dataclass(frozen=True)
class UserDirs:
    """platformdirs locations, overridable for tests."""

    app_name: str = _APP_NAME
    config_dir_override: Path | None = None
    cache_dir_override: Path | None = None

    def config_dir(self) -> Path:
        return self.config_dir_override or Path(user_config_dir(self.app_name, appauthor=False))

    def cache_dir(self) -> Path:
        return self.cache_dir_override or Path(user_cache_dir(self.app_name, appauthor=False))

    def config_file(self) -> Path:
        return self.config_dir() / USER_CONFIG_FILE
