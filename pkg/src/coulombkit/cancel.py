"""Cooperative cancellation for long enumerations.

Library operations that loop over unbounded-looking search regions accept an
optional token and call ``check()`` inside the loop.  A ``None`` token never
cancels.
"""

from __future__ import annotations

import time

from .errors import Cancelled


class CancellationToken:
    """Deadline-based token; ``check()`` raises ``Cancelled`` once expired."""

    def __init__(self, timeout: float | None = None):
        self._deadline = None if timeout is None else time.monotonic() + timeout
        self._cancelled = False

    def cancel(self) -> None:
        self._cancelled = True

    def check(self) -> None:
        if self._cancelled:
            raise Cancelled("operation cancelled")
        if self._deadline is not None and time.monotonic() > self._deadline:
            raise Cancelled("operation timed out")


def check(token: CancellationToken | None) -> None:
    if token is not None:
        token.check()
