"""Event bus - Publish/subscribe channel for sweep progress and violations."""

import logging
from collections import defaultdict
from threading import Lock
from typing import Any, Callable, Dict, List, Optional


logger = logging.getLogger(__name__)

CASE_CHECKED = "sweep.case_checked"
VIOLATION = "sweep.violation"


class EventBus:
    """
    Thread-safe pub/sub.

    A subscriber that raises is logged and skipped; the others still run.

    Example:
        >>> bus = EventBus()
        >>> bus.subscribe(VIOLATION, notifier.on_violation)
        >>> bus.publish(VIOLATION, {"check": "parity", "complex": "K(m=3; {1,2})"})
    """

    def __init__(self) -> None:
        self._subscribers: Dict[str, List[Callable[[Any], None]]] = defaultdict(list)
        self._lock = Lock()
        self.published: Dict[str, int] = defaultdict(int)

    def subscribe(self, event_type: str, callback: Callable[[Any], None]) -> None:
        with self._lock:
            self._subscribers[event_type].append(callback)
        logger.debug(f"Subscribed to '{event_type}': {getattr(callback, '__name__', callback)}")

    def unsubscribe(self, event_type: str, callback: Callable[[Any], None]) -> None:
        with self._lock:
            if callback in self._subscribers[event_type]:
                self._subscribers[event_type].remove(callback)

    def publish(self, event_type: str, data: Any = None) -> None:
        """
        Deliver data to every subscriber of event_type, in subscription order.
        """
        with self._lock:
            subscribers = self._subscribers[event_type].copy()
            self.published[event_type] += 1

        for callback in subscribers:
            try:
                callback(data)
            except Exception as e:
                logger.error(
                    f"Error in subscriber {getattr(callback, '__name__', callback)} for '{event_type}': {e}",
                    exc_info=True,
                )

    def clear(self, event_type: Optional[str] = None) -> None:
        with self._lock:
            if event_type:
                self._subscribers[event_type].clear()
            else:
                self._subscribers.clear()

    def get_subscriber_count(self, event_type: str) -> int:
        with self._lock:
            return len(self._subscribers[event_type])
