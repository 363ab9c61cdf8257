"""Exception types raised across the package."""


class ValidationError(ValueError):
    """An input violates a documented precondition or invariant."""


class FciDumpParseError(ValueError):
    """Malformed FCIDUMP text.

    Args:
        message: Human-readable description of the problem.
        line: 1-based line number where the problem was detected, if known.
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CodeDistanceOverflow(ValueError):
    """No surface-code distance up to the configured maximum meets the failure budget."""
