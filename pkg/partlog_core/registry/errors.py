"""Errors raised by the command registry."""

from __future__ import annotations


class FeatureRegistryError(Exception):
    """Base class for registry errors."""


class FeatureCollisionError(FeatureRegistryError):
    """Raised when a command name is registered twice."""


class FeatureNotFoundError(FeatureRegistryError):
    """Raised when a command cannot be resolved."""

    def __init__(self, name: str) -> None:
        super().__init__(f"unknown command {name!r}")
        self.name = name
