"""Deciding equality of conjunctive and disjunctive proof terms through finite
functions, and compiling conjunctive deductions into one-letter disjunctive ones."""

from .errors import (
    CalculusError,
    InternalInvariantViolation,
    LengthMismatch,
    NotAFunction,
    OutOfRange,
    ParseError,
    TypeMismatch,
)
from .finfun import FinFun, Radices
from .gen import SplitEq

__version__ = "0.1.0"

__all__ = [
    "CalculusError", "FinFun", "InternalInvariantViolation", "LengthMismatch",
    "NotAFunction", "OutOfRange", "ParseError", "Radices", "SplitEq", "TypeMismatch",
]
