"""Numerical semigroups: gap classification, Hilbert numerators and closed forms."""

from .analysis import Analysis, analyze
from .core import (
    AperyTable,
    GapClassification,
    Generators,
    SemigroupProfile,
    classify_gaps,
    compute_apery,
    contains,
    profile,
    validate_generators,
)
from .errors import InternalInvariantViolation, InvalidInput, SemigapError, SweepFailure
from .polyhilbert import SparsePoly, numerator_q, v_polynomial
from .report import SemigroupReport

__version__ = "0.1.0"

__all__ = [
    "Analysis", "analyze", "AperyTable", "GapClassification", "Generators",
    "SemigroupProfile", "classify_gaps", "compute_apery", "contains", "profile",
    "validate_generators", "InternalInvariantViolation", "InvalidInput", "SemigapError",
    "SweepFailure", "SparsePoly", "numerator_q", "v_polynomial", "SemigroupReport",
]
