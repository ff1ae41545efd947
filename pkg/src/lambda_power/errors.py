"""Shared exception types for capacity limits and internal consistency."""

from __future__ import annotations


class CapacityExceeded(RuntimeError):
    """An exact computation was refused or abandoned because it exceeds a limit.

    Carries whatever partial information is still sound (best known bounds)
    so callers can degrade gracefully instead of failing outright.
    """

    def __init__(self, message: str, *, lower_bound: int | None = None,
                 upper_bound: int | None = None):
        super().__init__(message)
        self.lower_bound = lower_bound
        self.upper_bound = upper_bound


class InternalError(RuntimeError):
    """A constructed object failed its own validation; a bug, not bad input."""


class VerificationError(RuntimeError):
    """Independent solution methods disagreed on a value that must be unique."""

    def __init__(self, message: str, *, values: dict[str, int] | None = None):
        super().__init__(message)
        self.values = dict(values or {})


class GroupSpecError(ValueError):
    """Group spec string rejected; ``position`` points at the offending index."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position
