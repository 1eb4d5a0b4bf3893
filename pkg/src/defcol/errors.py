"""Exception types raised by defcol."""


class GraphFormatError(ValueError):
    """A graph or certificate file could not be parsed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PreconditionError(ValueError):
    """An operation was called on an input outside its domain."""


class InternalContradiction(RuntimeError):
    """A construction that is guaranteed to exist was not found.

    This always indicates a bug, never bad input.
    """
