"""Exception hierarchy shared by the library and the command line."""

from __future__ import annotations

from typing import Any, Optional


class SpechtBrauerError(Exception):
    """Base class for every error raised on purpose by the package."""


class InvalidInputError(SpechtBrauerError, ValueError):
    """Arguments violate a documented precondition."""


class NotInSpanError(InvalidInputError):
    """A vector does not lie in the span of the standard polytabloids."""


class ResourceLimitError(SpechtBrauerError, RuntimeError):
    """A configured cap (group order, dimension, search size) was exceeded.

    ``partial`` carries whatever was computed before the limit was hit, e.g.
    the endomorphism dimension when the locality test is infeasible.
    """

    def __init__(self, message: str, *, partial: Optional[Any] = None) -> None:
        super().__init__(message)
        self.partial = partial


__all__ = ["SpechtBrauerError", "InvalidInputError", "NotInSpanError", "ResourceLimitError"]
