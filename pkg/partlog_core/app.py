"""Composition root wiring settings, events, commands and the partition table."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Mapping, Sequence

from partlog_numeric.partitions import PartitionTable, cache_sync

from .builtins import register_builtin_commands
from .config import Settings, SettingsResolver
from .events import CACHE_SYNCED, EventBus
from .paths import UserDirs
from .registry import FeatureRegistry
from .services import ServiceContainer

ServiceProvider = Callable[[ServiceContainer], Any]


@dataclass(frozen=True)
class PartlogAppStatus:
    settings: Settings
    commands: Sequence[str]
    services: Sequence[str]


class PartlogApp:
    """Entry point that owns configuration and the single-writer partition table."""

    def __init__(
        self,
        *,
        settings: Settings | None = None,
        overrides: Mapping[str, str | None] | None = None,
        env: Mapping[str, str] | None = None,
        project_dir: Path | str | None = None,
        user_dirs: UserDirs | None = None,
        logger: logging.Logger | None = None,
        container: ServiceContainer | None = None,
    ) -> None:
        self.logger = logger or logging.getLogger("partlog_core.app")
        self.user_dirs = user_dirs or UserDirs()
        self.container = container or ServiceContainer()
        self._fixed_settings = settings
        self._overrides: dict[str, str | None] = dict(overrides or {})
        self._env = env
        self._project_dir = Path(project_dir) if project_dir is not None else None
        self._builtins_registered = False
        self._register_services()

    # ---------- services ----------

    def _register_services(self) -> None:
        self._register_service("settings", lambda _: self._resolve_settings())
        self._register_service("events", lambda _: EventBus())
        self._register_service("feature_registry", lambda _: FeatureRegistry())
        self._register_service("partition_table", lambda _: PartitionTable())

    def _register_service(self, name: str, provider: ServiceProvider, *, singleton: bool = True) -> None:
        if name in self.container:
            self.logger.debug("service %s already registered, skipping", name)
            return
        self.container.register(name, provider, singleton=singleton)

    def _resolve_settings(self) -> Settings:
        if self._fixed_settings is not None:
            return self._fixed_settings
        resolver = SettingsResolver(
            cli_overrides=self._overrides,
            env=self._env,
            project_dir=self._project_dir,
            user_dirs=self.user_dirs,
        )
        return resolver.resolve()

    @property
    def settings(self) -> Settings:
        return self.container.get("settings")

    @property
    def events(self) -> EventBus:
        return self.container.get("events")

    @property
    def feature_registry(self) -> FeatureRegistry:
        return self.container.get("feature_registry")

    @property
    def partition_table(self) -> PartitionTable:
        return self.container.get("partition_table")

    # ---------- lifecycle ----------

    def configure(self, overrides: Mapping[str, str | None]) -> Settings:
        """Layer command-line overrides on top of the current ones and re-resolve settings."""

        self._overrides.update({key: value for key, value in overrides.items() if value is not None})
        self._fixed_settings = None
        self.container.reset("settings")
        settings = self.settings
        self.logger.debug("settings resolved: %s", settings)
        return settings

    def ensure_partitions(self, upto: int) -> PartitionTable:
        """Extend the table through ``upto`` before any fan-out; persists when caching is on."""

        table = self.partition_table
        settings = self.settings
        if not settings.use_cache:
            table.extend(upto)
            return table
        cache_sync(settings.cache_path, upto, table)
        self.events.emit(CACHE_SYNCED, {"path": str(settings.cache_path), "upto": upto, "max_n": table.max_n})
        return table

    def _register_builtins(self) -> None:
        if self._builtins_registered:
            return
        register_builtin_commands(self.feature_registry)
        self._builtins_registered = True

    def bootstrap(self) -> PartlogAppStatus:
        self._register_builtins()
        return PartlogAppStatus(
            settings=self.settings,
            commands=self.feature_registry.names(),
            services=self.container.names(),
        )
