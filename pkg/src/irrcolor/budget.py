"""Cooperative time budgets for long-running searches.

Solvers accept an optional token and poll it at branch boundaries, so a
caller can bound a whole run without killing the process.
"""

import time

from .errors import SearchCancelled


class Deadline:
    """Monotonic-clock deadline. ``expired()`` is cheap enough to poll."""

    __slots__ = ("at",)

    def __init__(self, seconds: float):
        self.at = time.monotonic() + seconds

    def expired(self) -> bool:
        return time.monotonic() >= self.at


def check(token) -> None:
    """Raise SearchCancelled when the token (if any) has expired."""
    if token is not None and token.expired():
        raise SearchCancelled("search budget exhausted")
