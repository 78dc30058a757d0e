"""Helper utilities for registering the built-in partlog commands."""

from __future__ import annotations

from typing import Sequence

from partlog_core.api import FEATURE_ATTRIBUTE
from partlog_core.registry import FeatureRegistry, RegistryEntry

from .help import HelpCommand
from .values import BoundsCommand, HrrCommand, PartitionCommand, PartitionRangeCommand
from .verification import AuxCommand, TableCommand, VerifyCommand

__all__ = ["register_builtin_commands"]

_BUILTIN_FEATURES: Sequence[type] = (
    PartitionCommand,
    PartitionRangeCommand,
    HrrCommand,
    BoundsCommand,
    VerifyCommand,
    AuxCommand,
    TableCommand,
    HelpCommand,
)


def register_builtin_commands(registry: FeatureRegistry) -> None:
    """Register the built-in command classes with the supplied registry."""

    for feature in _BUILTIN_FEATURES:
        metadata = getattr(feature, FEATURE_ATTRIBUTE, None)
        if metadata is None:
            continue
        registry.register(
            RegistryEntry(
                group=metadata["group"],
                name=str(metadata["name"]),
                target=feature,
                kind=str(metadata["kind"]),
                origin="builtin",
            )
        )
