"""Synchronous event bus for verification progress and cache activity."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Any, Callable

__all__ = [
    "CACHE_SYNCED",
    "Event",
    "EventBus",
    "EventHandler",
    "STANDARD_EVENTS",
    "VERIFY_CHUNK_DONE",
    "VERIFY_FINISHED",
    "VERIFY_STARTED",
]

VERIFY_STARTED = "verify.started"
VERIFY_CHUNK_DONE = "verify.chunk_done"
VERIFY_FINISHED = "verify.finished"
CACHE_SYNCED = "cache.synced"

STANDARD_EVENTS = (VERIFY_STARTED, VERIFY_CHUNK_DONE, VERIFY_FINISHED, CACHE_SYNCED)


@dataclass(frozen=True)
class Event:
    name: str
    payload: dict[str, Any]


EventHandler = Callable[[Event], None]


@dataclass(frozen=True)
class _EventSubscription:
    priority: int
    order: int
    handler: EventHandler


class EventBus:
    """Handlers run in descending priority, then in subscription order."""

    def __init__(self) -> None:
        self._handlers: defaultdict[str, list[_EventSubscription]] = defaultdict(list)
        self._sequence: defaultdict[str, int] = defaultdict(int)

    def on(self, event_name: str, handler: EventHandler, priority: int = 0) -> None:
        order = self._sequence[event_name]
        self._sequence[event_name] = order + 1
        self._handlers[event_name].append(_EventSubscription(priority=priority, order=order, handler=handler))

    def emit(self, event_name: str, payload: dict[str, Any] | None = None) -> Event:
        event = Event(event_name, dict(payload or {}))
        subscriptions = sorted(self._handlers[event_name], key=lambda item: (-item.priority, item.order))
        for subscription in subscriptions:
            subscription.handler(event)
        return event

    def chunk_reporter(self, label: str) -> Callable[[int, int], None]:
        """Adapter turning the verifiers' ``on_chunk(done, total)`` into events."""

        def report(done: int, total: int) -> None:
            self.emit(VERIFY_CHUNK_DONE, {"label": label, "done": done, "total": total})

        return report
