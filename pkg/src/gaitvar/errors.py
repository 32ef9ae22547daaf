"""Exception types shared across the package.

Everything raised on bad input derives from GaitVarError so callers (and
the CLI) can distinguish data problems from programming errors.
"""


class GaitVarError(Exception):
    """Base class for all data/validation errors raised by this package."""


class ParseError(GaitVarError):
    """A document could not be parsed.

    Carries the 1-based line number when one is known.
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
