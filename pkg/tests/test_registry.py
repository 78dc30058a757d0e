"""Tests for the command registry and the command decorator."""

from __future__ import annotations

from argparse import ArgumentParser, Namespace

import pytest

from partlog_core.api import FEATURE_ATTRIBUTE, PartlogAbstractCommand, partlogcommand
from partlog_core.builtins import register_builtin_commands
from partlog_core.registry import (
    FeatureCollisionError,
    FeatureNotFoundError,
    FeatureRegistry,
    RegistryEntry,
)


class _Noop(PartlogAbstractCommand):
    @classmethod
    def configure(cls, parser: ArgumentParser) -> None:
        pass

    def run(self, argv: Namespace) -> int:
        return 0


def _entry(name: str = "noop", group: str = "extra") -> RegistryEntry:
    return RegistryEntry(group=group, name=name, target=_Noop, kind="command", origin="test")


def test_resolve_by_name_and_qualified_name() -> None:
    registry = FeatureRegistry()
    entry = _entry()
    registry.register(entry)

    assert registry.resolve("noop") is entry
    assert registry.resolve("extra:noop") is entry
    assert registry.names() == ("noop",)


def test_name_collision_across_groups_is_rejected() -> None:
    registry = FeatureRegistry()
    registry.register(_entry(group="one"))
    with pytest.raises(FeatureCollisionError):
        registry.register(_entry(group="two"))


def test_unknown_command_message() -> None:
    with pytest.raises(FeatureNotFoundError, match="unknown command 'missing'"):
        FeatureRegistry().resolve("missing")


@pytest.mark.parametrize(("field", "value"), [("name", ""), ("group", "a:b")])
def test_entry_components_are_validated(field: str, value: str) -> None:
    kwargs = {"group": "extra", "name": "noop", "target": _Noop, "kind": "command", "origin": "test"}
    kwargs[field] = value
    with pytest.raises(ValueError):
        RegistryEntry(**kwargs)


def test_entry_target_must_be_a_class() -> None:
    with pytest.raises(TypeError):
        RegistryEntry(
            group="extra", name="noop", target=object(), kind="command", origin="test"  # type: ignore[arg-type]
        )


def test_decorator_attaches_metadata() -> None:
    decorated = partlogcommand(name="noop", group="extra")(_Noop)
    metadata = getattr(decorated, FEATURE_ATTRIBUTE)
    assert metadata == {"kind": "command", "name": "noop", "group": "extra", "qualified_name": "extra:noop"}


def test_decorator_defaults_group_to_top_level_package() -> None:
    @partlogcommand
    class Local(_Noop):
        pass

    assert getattr(Local, FEATURE_ATTRIBUTE)["qualified_name"] == "tests:Local"


def test_decorator_rejects_non_commands() -> None:
    with pytest.raises(TypeError):
        partlogcommand(lambda: None)  # type: ignore[arg-type]

    with pytest.raises(TypeError):

        @partlogcommand(name="plain")
        class Plain:
            pass


def test_builtin_commands_register_under_partlog_group() -> None:
    registry = FeatureRegistry()
    register_builtin_commands(registry)

    assert registry.names() == ("aux", "bounds", "help", "hrr", "p", "p-range", "table", "verify")
    assert {entry.qualified_name.split(":")[0] for entry in registry.entries()} == {"partlog"}
    assert {entry.origin for entry in registry.entries()} == {"builtin"}
