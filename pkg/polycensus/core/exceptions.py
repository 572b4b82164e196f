"""
Exception hierarchy
"""
from typing import Optional


class PolyCensusError(Exception):
    """Base class for all library errors"""


class FieldError(PolyCensusError, ValueError):
    """Invalid field parameters (non-prime characteristic, bad modulus, oversize field)"""


class FieldMismatchError(PolyCensusError, ValueError):
    """Operands live in different fields"""


class FieldZeroDivisionError(PolyCensusError, ZeroDivisionError):
    """Inversion of zero or division by the zero polynomial"""


class ZeroPolynomialError(PolyCensusError, ValueError):
    """Operation undefined for the zero polynomial (gcd of zeros, Sylvester matrix of zero)"""


class DimensionMismatchError(PolyCensusError, ValueError):
    """Matrix shapes are not conformable or violate a shape precondition"""


class SingularMatrixError(PolyCensusError, ValueError):
    """A nonsingular (or invertible) matrix was required"""


class RankDeficientError(PolyCensusError, ValueError):
    """A matrix lacks the full row/column rank the operation needs"""


class NonExactDivisionError(PolyCensusError, ArithmeticError):
    """A division that the caller guaranteed exact left a remainder"""


class InternalConsistencyError(PolyCensusError, AssertionError):
    """A self-check failed; signals a bug, not bad input"""


class BudgetExceededError(PolyCensusError):
    """The requested enumeration is larger than the configured budget"""

    def __init__(self, required: int, budget: int, what: str = "enumeration"):
        self.required = required
        self.budget = budget
        super().__init__(
            f"{what} needs {required} elements but the budget is {budget}; "
            f"use Monte Carlo estimation (mc) instead"
        )


class UnknownFormulaError(PolyCensusError, KeyError):
    """Formula name is not in the catalog"""


class UnknownPropertyError(PolyCensusError, KeyError):
    """Census property name is not registered"""


class InsufficientDataError(PolyCensusError, ValueError):
    """Not enough field sizes or trials for the requested estimate"""


class ParseError(PolyCensusError, ValueError):
    """Malformed literal or input file"""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
