"""Exception types shared across the package."""

from __future__ import annotations


class GraphError(ValueError):
    """Malformed graph input (range violation, duplicate edge, loop)."""


class PreconditionError(ValueError):
    """An operation was called on input outside its domain."""


class SizeCapError(RuntimeError):
    """Instance exceeds the configured cap for an exponential-time routine."""

    def __init__(self, what: str, size: int, cap: int):
        super().__init__(f"{what} = {size} exceeds cap {cap}")
        self.what = what
        self.size = size
        self.cap = cap


class InvariantError(RuntimeError):
    """Internal inconsistency; always a bug."""


class PaperContradiction(RuntimeError):
    """A proven guarantee failed on a concrete instance.

    Raised e.g. when a graph passing the double Hall check has no covering
    2-factor. Treated as a bug until proven otherwise.
    """


class InstanceFormatError(ValueError):
    """Parse failure in an instance file, with 1-based line/column."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class SamplingError(RuntimeError):
    """Rejection sampler hit its retry cap; ``stats`` records what was rejected."""

    def __init__(self, message: str, stats: dict):
        super().__init__(f"{message}; stats: {stats}")
        self.stats = stats
