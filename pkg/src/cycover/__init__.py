"""Exact finite-index analysis of weighting kernels of finitely presented groups."""

__version__ = "0.1.0"

from .words import (
    FreeWord,
    Presentation,
    ParseError,
    NotKnotLike,
    parse_presentation,
)
from .laurent import LaurentPoly, INFINITE, factor_over_Z

__all__ = [
    "FreeWord",
    "Presentation",
    "ParseError",
    "NotKnotLike",
    "parse_presentation",
    "LaurentPoly",
    "INFINITE",
    "factor_over_Z",
    "__version__",
]
