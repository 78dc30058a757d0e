"""Settings resolution across the configuration layers."""

from __future__ import annotations

from pathlib import Path

import pytest

from partlog_core.config import ConfigError, Settings, SettingsResolver, _parse_bool
from partlog_core.paths import UserDirs


@pytest.fixture()
def user_dirs(tmp_path: Path) -> UserDirs:
    return UserDirs(config_dir_override=tmp_path / "user", cache_dir_override=tmp_path / "cache")


def _write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")


def test_defaults_when_no_layer_is_present(tmp_path: Path, user_dirs: UserDirs) -> None:
    settings = SettingsResolver(env={}, project_dir=tmp_path, user_dirs=user_dirs).resolve()
    assert settings == Settings()
    assert settings.cache_path == Path("partlog-cache.txt")


def test_layers_apply_in_priority_order(tmp_path: Path, user_dirs: UserDirs) -> None:
    _write(user_dirs.config_file(), "[partlog]\nprec_init = 64\nprec_max = 512\njobs = 3\noutput_format = 'json'\n")
    _write(tmp_path / "partlog.toml", "[partlog]\nprec_init = 80\nprec_max = 1024\n")
    env = {"PARTLOG_PREC_MAX": "2048", "PARTLOG_JOBS": ""}

    resolver = SettingsResolver(
        cli_overrides={"prec_max": "4096", "jobs": None},
        env=env,
        project_dir=tmp_path,
        user_dirs=user_dirs,
    )
    settings = resolver.resolve()

    assert settings.prec_max == 4096
    assert settings.prec_init == 80
    assert settings.jobs == 3
    assert settings.output_format == "json"
    assert resolver.resolve_setting("escalation") == "2"


def test_environment_beats_files(tmp_path: Path, user_dirs: UserDirs) -> None:
    _write(tmp_path / "partlog.toml", "[partlog]\ncache_path = 'from-file.txt'\n")
    settings = SettingsResolver(
        env={"PARTLOG_CACHE": "~/values.txt", "PARTLOG_LOG_LEVEL": "debug"},
        project_dir=tmp_path,
        user_dirs=user_dirs,
    ).resolve()
    assert settings.cache_path == Path("~/values.txt").expanduser()
    assert settings.log_level == "DEBUG"


def test_top_level_keys_are_accepted_without_section(tmp_path: Path, user_dirs: UserDirs) -> None:
    _write(tmp_path / "partlog.toml", "use_cache = false\n")
    settings = SettingsResolver(env={}, project_dir=tmp_path, user_dirs=user_dirs).resolve()
    assert settings.use_cache is False


def test_unreadable_config_is_ignored(tmp_path: Path, user_dirs: UserDirs) -> None:
    _write(tmp_path / "partlog.toml", "[partlog\nbroken")
    settings = SettingsResolver(env={}, project_dir=tmp_path, user_dirs=user_dirs).resolve()
    assert settings.prec_init == 96


@pytest.mark.parametrize(
    "overrides",
    [
        {"prec_init": "many"},
        {"use_cache": "perhaps"},
        {"prec_init": "1"},
        {"prec_init": "512", "prec_max": "256"},
        {"escalation": "1"},
        {"jobs": "0"},
        {"output_format": "yaml"},
        {"log_level": "loud"},
    ],
)
def test_invalid_values_raise_config_error(tmp_path: Path, user_dirs: UserDirs, overrides: dict[str, str]) -> None:
    resolver = SettingsResolver(cli_overrides=overrides, env={}, project_dir=tmp_path, user_dirs=user_dirs)
    with pytest.raises(ConfigError):
        resolver.resolve()


@pytest.mark.parametrize(
    ("raw", "expected"),
    [("1", True), (" Yes", True), ("on", True), ("0", False), ("OFF", False)],
)
def test_parse_bool(raw: str, expected: bool) -> None:
    assert _parse_bool("flag", raw) is expected


def test_settings_policy() -> None:
    policy = Settings(prec_init=32, prec_max=128, escalation=4).policy()
    assert policy.schedule() == (32, 128)
