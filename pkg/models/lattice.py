"""
Lattice base class - abstract base for the residuated lattices of truth values
"""
from __future__ import annotations

from abc import ABC, abstractmethod
from enum import Enum
from fractions import Fraction
from functools import reduce
from typing import Iterable, Union

from .errors import FuzzyAutomataError, IncompatibleValue

# Exact rationals for the unit-interval kinds, integer indices for chains
TruthValue = Union[Fraction, int]


class LatticeTag(Enum):
    """The residuated lattice structures available"""
    BOOLEAN = "boolean"
    GODEL = "godel"
    PRODUCT = "product"
    LUKASIEWICZ = "lukasiewicz"
    CHAIN = "chain"


class Lattice(ABC):
    """Base class for all linearly ordered residuated lattices.

    Values are plain immutable numbers; the lattice object only knows how to
    combine them. ``meet``/``join``/``tensor``/``residuum`` validate their
    arguments, the underscored variants are the unchecked kernels used in
    the inner loops of relation algebra.
    """

    tag: LatticeTag

    @property
    @abstractmethod
    def zero(self) -> TruthValue:
        """Least element"""

    @property
    @abstractmethod
    def one(self) -> TruthValue:
        """Greatest element"""

    @property
    def name(self) -> str:
        return self.tag.value

    @abstractmethod
    def contains(self, x) -> bool:
        """True iff x is a canonical member of the carrier"""

    @abstractmethod
    def coerce(self, x) -> TruthValue:
        """Convert x (number or text) to the canonical carrier value"""

    @abstractmethod
    def format_value(self, x: TruthValue) -> str:
        """Text form used by the .fza format and the text reports"""

    @abstractmethod
    def json_value(self, x: TruthValue):
        """JSON-safe form of x (never a float)"""

    @abstractmethod
    def _tensor(self, x: TruthValue, y: TruthValue) -> TruthValue:
        pass

    @abstractmethod
    def _residuum(self, x: TruthValue, y: TruthValue) -> TruthValue:
        pass

    def _meet(self, x: TruthValue, y: TruthValue) -> TruthValue:
        return x if x <= y else y

    def _join(self, x: TruthValue, y: TruthValue) -> TruthValue:
        return y if x <= y else x

    def check(self, x) -> TruthValue:
        """Return x unchanged if it is a carrier member, else raise"""
        if not self.contains(x):
            raise IncompatibleValue(f"{x!r} is not a value of lattice {self.name}")
        return x

    def meet(self, x: TruthValue, y: TruthValue) -> TruthValue:
        return self._meet(self.check(x), self.check(y))

    def join(self, x: TruthValue, y: TruthValue) -> TruthValue:
        return self._join(self.check(x), self.check(y))

    def tensor(self, x: TruthValue, y: TruthValue) -> TruthValue:
        return self._tensor(self.check(x), self.check(y))

    def residuum(self, x: TruthValue, y: TruthValue) -> TruthValue:
        return self._residuum(self.check(x), self.check(y))

    def biresiduum(self, x: TruthValue, y: TruthValue) -> TruthValue:
        x, y = self.check(x), self.check(y)
        return self._meet(self._residuum(x, y), self._residuum(y, x))

    def join_all(self, values: Iterable[TruthValue]) -> TruthValue:
        """Supremum of a finite family, zero for the empty one"""
        return reduce(self._join, values, self.zero)

    def meet_all(self, values: Iterable[TruthValue]) -> TruthValue:
        """Infimum of a finite family, one for the empty one"""
        return reduce(self._meet, values, self.one)

    def from_json_value(self, raw) -> TruthValue:
        return self.coerce(raw)

    def __eq__(self, other) -> bool:
        return isinstance(other, Lattice) and self.name == other.name

    def __hash__(self) -> int:
        return hash(self.name)

    def __repr__(self):
        return f"<Lattice {self.name}>"

    @staticmethod
    def from_name(name: str) -> Lattice:
        """Get lattice by name ("godel", "chain:4", ...) - returns appropriate subclass instance"""
        # Import here to avoid circular imports
        from lattice_types.unit_interval import (BooleanLattice, GodelLattice,
                                                 LukasiewiczLattice, ProductLattice)
        from lattice_types.chain import ChainLattice

        text = name.strip().lower()
        if text == LatticeTag.BOOLEAN.value:
            return BooleanLattice()
        elif text in (LatticeTag.GODEL.value, "gödel"):
            return GodelLattice()
        elif text in (LatticeTag.PRODUCT.value, "goguen"):
            return ProductLattice()
        elif text in (LatticeTag.LUKASIEWICZ.value, "łukasiewicz"):
            return LukasiewiczLattice()
        elif text.startswith(LatticeTag.CHAIN.value + ":"):
            size = text.split(":", 1)[1]
            if not size.isdigit():
                raise FuzzyAutomataError(f"Chain length must be a positive integer, got {size!r}")
            return ChainLattice(int(size))
        raise FuzzyAutomataError(f"Unknown lattice {name!r}")


def to_fraction(x) -> Fraction:
    """Exact conversion of ints, Fractions and decimal/fraction text (no floats)"""
    if isinstance(x, bool):
        raise IncompatibleValue(f"{x!r} is not a truth value")
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError):
            raise IncompatibleValue(f"{x!r} is not a rational number")
    raise IncompatibleValue(f"{x!r} is not an exact rational (floats are not accepted)")
