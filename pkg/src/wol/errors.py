"""Exception types shared across the package.

``DomainError`` covers invalid mathematical input (order violations, bad
shapes); ``ResourceCapError`` signals that an enumeration exceeded its
configured cap.  The CLI maps these onto distinct exit codes.
"""

from __future__ import annotations

import os

__all__ = [
    "DomainError",
    "OrderError",
    "ShapeError",
    "InternalError",
    "ResourceCapError",
    "resolve_cap",
]


class DomainError(ValueError):
    """Invalid input in the mathematical domain."""


class OrderError(DomainError):
    """A required weak-order relation does not hold."""


class ShapeError(DomainError):
    """A diagram, filling, or composition has the wrong shape."""


class InternalError(RuntimeError):
    """A structural self-check failed; indicates a bug, not bad input."""


class ResourceCapError(RuntimeError):
    """An enumeration exceeded its cap.

    ``count`` holds the partial count reached before giving up.
    """

    def __init__(self, message: str, count: int | None = None):
        super().__init__(message)
        self.count = count


def resolve_cap(explicit: int | None, default: int) -> int:
    """Pick an enumeration cap.

    An explicit argument wins; otherwise the default, raised by the
    ``WOL_NMAX_OVERRIDE`` environment variable when that is set higher.
    """
    if explicit is not None:
        return explicit
    override = os.environ.get("WOL_NMAX_OVERRIDE")
    if override is not None:
        return max(default, int(override))
    return default
