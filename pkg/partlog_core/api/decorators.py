"""Decorator that marks command classes with registry metadata."""

from __future__ import annotations

from typing import Any, Callable, Type

from .abc import PartlogAbstractCommand

_FeatureCandidate = Type[Any]

FEATURE_ATTRIBUTE = "__partlog_feature__"


def _determine_group(cls: type, override: str | None) -> str:
    if override:
        return override
    module = getattr(cls, "__module__", "")
    return module.split(".")[0] or "partlog"


def _attach_feature_metadata(cls: type, *, name: str | None, group: str | None) -> type:
    metadata = {
        "kind": "command",
        "name": name or cls.__name__,
        "group": _determine_group(cls, group),
    }
    metadata["qualified_name"] = f"{metadata['group']}:{metadata['name']}"
    setattr(cls, FEATURE_ATTRIBUTE, metadata)
    return cls


def partlogcommand(
    cls: _FeatureCandidate | None = None,
    *,
    name: str | None = None,
    group: str | None = None,
) -> Callable[[_FeatureCandidate], _FeatureCandidate] | _FeatureCandidate:
    """Attach ``group:name`` metadata; usable bare or with keyword arguments."""

    def wrap(target: _FeatureCandidate) -> _FeatureCandidate:
        if not isinstance(target, type):
            raise TypeError("Decorated object must be a class.")
        if not issubclass(target, PartlogAbstractCommand):
            raise TypeError(f"{target.__name__} must subclass PartlogAbstractCommand to be registered as a command.")
        return _attach_feature_metadata(target, name=name, group=group)

    if cls is None:
        return wrap
    return wrap(cls)
