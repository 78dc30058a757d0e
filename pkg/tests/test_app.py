"""PartlogApp wiring: settings overrides, bootstrap and the partition cache."""

from __future__ import annotations

from pathlib import Path

import pytest

from partlog_core import EventBus, PartlogApp, Settings
from partlog_core.events import CACHE_SYNCED
from partlog_core.paths import UserDirs
from partlog_core.services import ServiceContainer
from partlog_numeric.partitions import CACHE_HEADER


@pytest.fixture()
def app(tmp_path: Path) -> PartlogApp:
    return PartlogApp(
        env={},
        project_dir=tmp_path,
        user_dirs=UserDirs(config_dir_override=tmp_path / "user"),
        overrides={"cache_path": str(tmp_path / "values.txt")},
    )


def test_bootstrap_lists_commands_and_services(app: PartlogApp) -> None:
    status = app.bootstrap()
    assert "verify" in status.commands
    assert status.services == ["events", "feature_registry", "partition_table", "settings"]
    assert app.bootstrap().commands == status.commands


def test_configure_layers_overrides(app: PartlogApp) -> None:
    assert app.settings.prec_init == 96
    settings = app.configure({"prec_init": "128", "jobs": None})
    assert settings.prec_init == 128
    assert app.settings is settings
    assert app.configure({"jobs": "2"}).prec_init == 128


def test_fixed_settings_are_used_until_reconfigured(tmp_path: Path) -> None:
    app = PartlogApp(
        settings=Settings(prec_init=48),
        project_dir=tmp_path,
        env={},
        user_dirs=UserDirs(config_dir_override=tmp_path / "user"),
    )
    assert app.settings.prec_init == 48
    assert app.configure({"prec_max": "256"}).prec_init == 96


def test_ensure_partitions_syncs_cache_and_emits(app: PartlogApp, tmp_path: Path) -> None:
    seen = []
    app.events.on(CACHE_SYNCED, seen.append)

    table = app.ensure_partitions(15)

    assert table[15] == 176
    lines = (tmp_path / "values.txt").read_text(encoding="utf-8").splitlines()
    assert lines[0] == CACHE_HEADER
    assert len(lines) == 17
    assert seen[0].payload["upto"] == 15
    assert app.ensure_partitions(10) is table


def test_ensure_partitions_in_memory(app: PartlogApp, tmp_path: Path) -> None:
    seen = []
    app.events.on(CACHE_SYNCED, seen.append)
    app.configure({"use_cache": "false"})

    assert app.ensure_partitions(20)[20] == 627
    assert not (tmp_path / "values.txt").exists()
    assert seen == []


def test_preregistered_services_are_kept(tmp_path: Path) -> None:
    container = ServiceContainer()
    events = EventBus()
    container.register("events", lambda _: events)

    app = PartlogApp(env={}, project_dir=tmp_path, container=container)

    assert app.events is events
    assert container.names() == ["events", "feature_registry", "partition_table", "settings"]
