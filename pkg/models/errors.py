"""
Errors - exception hierarchy shared by the library and the command line
"""
from typing import Optional


class FuzzyAutomataError(ValueError):
    """Base class for all domain errors"""


class IncompatibleValue(FuzzyAutomataError):
    """A value is not a member of the lattice carrier"""


class CarrierViolation(IncompatibleValue):
    """An automaton component holds a value outside the lattice carrier"""


class DimensionMismatch(FuzzyAutomataError):
    """Shapes of sets/relations do not fit together"""


class KindMismatch(FuzzyAutomataError):
    """Operands belong to different lattices"""


class UnknownSymbol(FuzzyAutomataError):
    """A word uses a symbol outside the alphabet"""

    def __init__(self, symbol: str, alphabet=()):
        self.symbol = symbol
        known = ", ".join(alphabet)
        super().__init__(f"Unknown symbol {symbol!r} (alphabet: {known})")


class NotQuasiOrder(FuzzyAutomataError):
    """A relation is required to be reflexive and transitive"""


class PreconditionFailed(FuzzyAutomataError):
    """A determinization relation fails its invariance precondition"""


class BudgetExceeded(FuzzyAutomataError):
    """A construction ran past one of its budgets"""

    def __init__(self, budget: str, limit: int, reached: Optional[int] = None,
                 message: str = ""):
        self.budget = budget
        self.limit = limit
        self.reached = reached
        text = message or f"Budget {budget}={limit} exceeded"
        super().__init__(text)


class FormatError(FuzzyAutomataError):
    """Problem in a .fza (or relation) file, with the offending line"""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class FzaSyntaxError(FormatError):
    """Malformed line or section order"""


class SemanticError(FormatError):
    """Well-formed text describing an invalid automaton"""


class DuplicateSection(FzaSyntaxError):
    """A section occurs twice"""
