"""Runtime layer for partlog: settings, services, events and the command registry."""

from .app import PartlogApp, PartlogAppStatus
from .config import ConfigError, Settings, SettingsResolver
from .events import EventBus

__all__ = [
    "ConfigError",
    "EventBus",
    "PartlogApp",
    "PartlogAppStatus",
    "Settings",
    "SettingsResolver",
]
