"""Exception types shared across the package."""


class LiaisonError(Exception):
    """Base class for all package-specific errors."""


class ParseError(LiaisonError):
    """Syntax or resolution error in a polynomial or instance file.

    Carries 1-based line/column of the offending token.
    """

    def __init__(self, message, line, col):
        super().__init__(f"line {line} col {col}: {message}")
        self.message = message
        self.line = line
        self.col = col


class RingMismatchError(LiaisonError):
    """Operands belong to different polynomial rings."""


class ResourceLimitError(LiaisonError):
    """A computation exceeded the configured degree or term-count cap."""


class WitnessError(LiaisonError):
    """A regular-sequence witness failed validation (regularity, generation,
    or a containment precondition of a linkage operation)."""
