"""Exception hierarchy shared by every computation module."""

from typing import Optional


class FaceRingError(Exception):
    """Base class for all errors raised by the toolkit."""


class InputError(FaceRingError):
    """
    Malformed or inconsistent input.

    Attributes:
        position: Where the problem was found (``line 3, column 5`` for parse
            errors, a key path such as ``maximal_faces[2][0]`` for schema errors)
    """

    def __init__(self, message: str, position: Optional[str] = None) -> None:
        self.message = message
        self.position = position
        if position:
            message = f"{message} (at {position})"
        super().__init__(message)


class SizeError(InputError):
    """A ground-set size or matrix size exceeds what an algorithm accepts."""


class NicenessError(FaceRingError):
    """
    A Z/2Z-valued function whose support is not downward closed.

    Attributes:
        face: Subset ``a`` with ``f(a) = 1``
        missing: Subset ``b ⊆ a`` with ``f(b) = 0`` (``None`` for the zero function)
    """

    def __init__(self, message: str, face=None, missing=None) -> None:
        self.face = face
        self.missing = missing
        super().__init__(message)


class MalformedComplexError(FaceRingError):
    """Consecutive differentials of a chain complex do not compose to zero."""
