"""Shared exception types."""


class CaramboleError(Exception):
    """Base class for package errors."""


class DomainError(CaramboleError, ValueError):
    """Input outside an operation's documented domain."""


class FormatError(CaramboleError, ValueError):
    """Malformed serialized input (graph6 line, matroid file)."""

    def __init__(self, message, offset=None):
        if offset is not None:
            message = "%s (byte offset %d)" % (message, offset)
        super().__init__(message)
        self.offset = offset


class BudgetError(CaramboleError):
    """A search exhausted its time budget before finishing.

    ``partial`` carries whatever the search had established so far, so a
    caller can report progress instead of discarding the run.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class CounterexampleError(CaramboleError):
    """A verified claim failed; ``payload`` holds a reproducible description.

    Raising instead of silently patching over the failure is deliberate:
    the whole point of the verifier is that a broken certificate surfaces.
    """

    def __init__(self, message, payload=None):
        super().__init__(message)
        self.payload = payload or {}
