"""Soft time budgets threaded through the exhaustive searches."""

import time

from .errors import BudgetError


class Deadline:
    """Monotonic-clock deadline; ``None`` seconds means unlimited."""

    __slots__ = ("t_end", "label")

    def __init__(self, seconds=None, label=""):
        self.t_end = None if seconds is None else time.monotonic() + seconds
        self.label = label

    def expired(self):
        return self.t_end is not None and time.monotonic() > self.t_end

    def check(self, partial=None):
        if self.expired():
            raise BudgetError("budget exhausted: %s" % (self.label or "search"),
                              partial=partial)

    def remaining(self):
        if self.t_end is None:
            return None
        return max(0.0, self.t_end - time.monotonic())


NO_DEADLINE = Deadline(None)
