"""
Unit interval lattices - boolean, Gödel, product and Łukasiewicz structures on [0, 1]
"""
from fractions import Fraction

from models.errors import IncompatibleValue
from models.lattice import Lattice, LatticeTag, TruthValue, to_fraction

ZERO = Fraction(0)
ONE = Fraction(1)


class UnitIntervalLattice(Lattice):
    """Common carrier handling for the rational kinds"""

    @property
    def zero(self) -> Fraction:
        return ZERO

    @property
    def one(self) -> Fraction:
        return ONE

    def contains(self, x) -> bool:
        return isinstance(x, Fraction) and ZERO <= x <= ONE

    def coerce(self, x) -> Fraction:
        value = to_fraction(x)
        if not ZERO <= value <= ONE:
            raise IncompatibleValue(f"{value} lies outside [0, 1]")
        return value

    def format_value(self, x: TruthValue) -> str:
        x = self.check(x)
        if x.denominator == 1:
            return str(x.numerator)
        # Finite decimal expansion when the denominator only has factors 2 and 5
        for digits in range(1, 40):
            scaled = x * 10 ** digits
            if scaled.denominator == 1:
                text = str(scaled.numerator).rjust(digits + 1, "0")
                return f"{text[:-digits]}.{text[-digits:]}"
        return f"{x.numerator}/{x.denominator}"

    def json_value(self, x: TruthValue) -> str:
        x = self.check(x)
        return f"{x.numerator}/{x.denominator}"


class GodelLattice(UnitIntervalLattice):
    """Gödel structure: tensor is min"""
    tag = LatticeTag.GODEL

    def _tensor(self, x, y):
        return x if x <= y else y

    def _residuum(self, x, y):
        return ONE if x <= y else y


class BooleanLattice(GodelLattice):
    """Two-element Boolean algebra {0, 1}"""
    tag = LatticeTag.BOOLEAN

    def contains(self, x) -> bool:
        return isinstance(x, Fraction) and (x == ZERO or x == ONE)

    def coerce(self, x) -> Fraction:
        value = to_fraction(x)
        if value != ZERO and value != ONE:
            raise IncompatibleValue(f"{value} is not a Boolean value")
        return value


class ProductLattice(UnitIntervalLattice):
    """Product (Goguen) structure: tensor is multiplication"""
    tag = LatticeTag.PRODUCT

    def _tensor(self, x, y):
        return x * y

    def _residuum(self, x, y):
        return ONE if x <= y else y / x


class LukasiewiczLattice(UnitIntervalLattice):
    """Łukasiewicz structure: bounded sum"""
    tag = LatticeTag.LUKASIEWICZ

    def _tensor(self, x, y):
        value = x + y - ONE
        return value if value > ZERO else ZERO

    def _residuum(self, x, y):
        value = ONE - x + y
        return value if value < ONE else ONE
