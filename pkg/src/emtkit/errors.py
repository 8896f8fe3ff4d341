"""Exception types shared across the library."""


class CapExceeded(RuntimeError):
    """An enumeration or construction would exceed a configured cap.

    Distinct from a negative answer: the check was not performed at all.
    """


class DomainError(ValueError):
    """An operation was applied outside its mathematical domain."""


class CoherenceError(RuntimeError):
    """Two routes that must agree by theorem disagreed; indicates a bug."""


class ParseError(ValueError):
    """A document violated the input schema; ``path`` points at the spot."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path
        self.message = message
