"""Exception types shared across the package."""


class HolorecError(Exception):
    """Base class for all package errors."""


class MixedFieldError(HolorecError, TypeError):
    """Operands live in different quadratic fields."""


class UnsupportedExtension(HolorecError):
    """A computation needs an algebraic extension the package cannot represent.

    ``suggested_D`` carries the square-free radicand when the obstruction is a
    single quadratic extension, otherwise ``None``.
    """

    def __init__(self, message, suggested_D=None, degree=None):
        super().__init__(message)
        self.suggested_D = suggested_D
        self.degree = degree


class PoleError(HolorecError, ZeroDivisionError):
    """Evaluation hit a zero denominator; ``factor`` names the culprit."""

    def __init__(self, message, factor=None):
        super().__init__(message)
        self.factor = factor


class ParseError(HolorecError, ValueError):
    """Syntax or semantic error in textual input, with 1-based position."""

    def __init__(self, message, line=1, column=1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.bare_message = message
        self.line = line
        self.column = column
