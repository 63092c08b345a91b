"""Exception types shared across the package.

Every error raised on purpose by this library derives from SwStemError, so
callers (and the CLI) can map domain failures to a single exit code.
"""

from __future__ import annotations


class SwStemError(Exception):
    """Base class for all domain errors raised by this package."""


class IndexNotIntegral(SwStemError):
    """c^2 - signature is not divisible by 8.

    Signals a class that cannot be the first Chern class of a spin-c
    structure on the given intersection form.
    """


class InvalidParameters(SwStemError):
    """Arguments violate a documented precondition (range, coprimality, order)."""


class UnknownSW(SwStemError):
    """The block kind carries no Seiberg-Witten data for the queried class."""


class UncataloguedBlock(SwStemError):
    """An object that is not one of the catalogued building blocks."""


class PositiveIndexOnNegativeDefinite(SwStemError):
    """Spin-c data on a negative definite block implies d > 0, which is impossible
    for a characteristic vector; the input data is inconsistent."""


class PreconditionNotMet(SwStemError):
    """The splitting analysis only covers total classes eta^2 and eta^3."""


class NotAnEllipticPattern(SwStemError):
    """The multiple pattern cannot be produced by any surface in the catalogue."""


class ManifoldSyntaxError(SwStemError):
    """Malformed JSON in a manifold description; carries line and column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class ManifoldSemanticError(SwStemError):
    """Well-formed JSON that does not describe a valid connected sum."""

    def __init__(self, message: str, block_index: int | None = None):
        if block_index is not None:
            message = f"summand {block_index}: {message}"
        super().__init__(message)
        self.block_index = block_index
