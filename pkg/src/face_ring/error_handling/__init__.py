"""Error handling module - Exception hierarchy, retry strategy, violation webhooks."""

from .errors import (
    FaceRingError,
    InputError,
    SizeError,
    NicenessError,
    MalformedComplexError,
)
from .strategies import with_retry
from .violation_notifier import ViolationNotifier

__all__ = [
    "FaceRingError",
    "InputError",
    "SizeError",
    "NicenessError",
    "MalformedComplexError",
    "with_retry",
    "ViolationNotifier",
]
