"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class CalculusError(Exception):
    """Base class for domain errors (the CLI maps these to exit status 1)."""


class TypeMismatch(CalculusError, TypeError):
    """Sources and targets do not line up for the requested operation."""


class OutOfRange(CalculusError, ValueError):
    pass


class LengthMismatch(CalculusError, ValueError):
    pass


class NotAFunction(CalculusError, ValueError):
    """A relation failed to be total or single-valued on its source.

    ``source`` is the first offending source element and ``image_count``
    the number of targets it is related to (0 or at least 2).
    """

    def __init__(self, source: int, image_count: int):
        self.source = source
        self.image_count = image_count
        if image_count == 0:
            detail = f"source {source} has no image"
        else:
            detail = f"source {source} has {image_count} images"
        super().__init__(f"relation is not a function ({detail})")


class ParseError(CalculusError, SyntaxError):
    """Ungrammatical term text; ``position`` is a 0-based character offset."""

    def __init__(self, message: str, text: str, position: int):
        self.position = position
        super().__init__(f"{message} at position {position}")
        self.text = text
        self.offset = position + 1


class InternalInvariantViolation(CalculusError, AssertionError):
    pass
