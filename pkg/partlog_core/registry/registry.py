"""In-memory registry of commands keyed by name."""

from __future__ import annotations

from .entry import RegistryEntry
from .errors import FeatureCollisionError, FeatureNotFoundError


class FeatureRegistry:
    """Commands resolve by simple name or by ``group:name``."""

    def __init__(self) -> None:
        self._by_qualified: dict[str, RegistryEntry] = {}
        self._by_name: dict[str, RegistryEntry] = {}

    def register(self, entry: RegistryEntry) -> None:
        if entry.qualified_name in self._by_qualified or entry.name in self._by_name:
            raise FeatureCollisionError(f"{entry.qualified_name} is already registered.")
        self._by_qualified[entry.qualified_name] = entry
        self._by_name[entry.name] = entry

    def resolve(self, name_or_qualified: str) -> RegistryEntry:
        table = self._by_qualified if ":" in name_or_qualified else self._by_name
        entry = table.get(name_or_qualified)
        if entry is None:
            raise FeatureNotFoundError(name_or_qualified)
        return entry

    def names(self) -> tuple[str, ...]:
        return tuple(sorted(self._by_name))

    def entries(self) -> tuple[RegistryEntry, ...]:
        return tuple(sorted(self._by_qualified.values(), key=lambda entry: entry.qualified_name))
