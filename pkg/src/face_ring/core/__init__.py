"""Core module - Event bus, resource limits and the per-run session."""

from .event_bus import CASE_CHECKED, VIOLATION, EventBus
from .resource_manager import ResourceManager, SystemResources
from .session import Session

__all__ = ["CASE_CHECKED", "VIOLATION", "EventBus", "ResourceManager", "SystemResources", "Session"]
