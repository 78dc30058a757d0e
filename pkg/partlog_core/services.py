"""Lazy service container behind ``PartlogApp``."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

__all__ = ["ServiceContainer"]

ServiceProvider = Callable[["ServiceContainer"], Any]


@dataclass(frozen=True)
class _ServiceRegistration:
    provider: ServiceProvider
    singleton: bool


class ServiceContainer:
    """Name -> provider map; singletons are built on first ``get``."""

    def __init__(self) -> None:
        self._registrations: dict[str, _ServiceRegistration] = {}
        self._singletons: dict[str, Any] = {}
        self._initializing: set[str] = set()

    def register(self, name: str, provider: ServiceProvider, *, singleton: bool = True) -> None:
        if name in self._registrations:
            raise ValueError(f"service {name!r} already registered")
        self._registrations[name] = _ServiceRegistration(provider=provider, singleton=singleton)

    def __contains__(self, name: object) -> bool:
        return name in self._registrations

    def names(self) -> list[str]:
        return sorted(self._registrations)

    def get(self, name: str) -> Any:
        registration = self._registrations.get(name)
        if registration is None:
            raise KeyError(f"service {name!r} is not registered")

        if registration.singleton and name in self._singletons:
            return self._singletons[name]

        if name in self._initializing:
            raise RuntimeError(f"re-entrant initialization detected for {name!r}")

        self._initializing.add(name)
        try:
            instance = registration.provider(self)
        finally:
            self._initializing.remove(name)

        if registration.singleton:
            self._singletons[name] = instance
        return instance

    def reset(self, name: str) -> None:
        """Drop a built singleton so the next ``get`` rebuilds it."""
        self._singletons.pop(name, None)
