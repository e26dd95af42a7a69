"""
Fuzzy set and fuzzy relation models - dense vectors and matrices of truth values
"""
from __future__ import annotations

from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

import pandas as pd

from .errors import DimensionMismatch, KindMismatch
from .lattice import Lattice, TruthValue


def state_names(n: int) -> Tuple[str, ...]:
    """Default state names a1..an"""
    return tuple(f"a{i + 1}" for i in range(n))


class FuzzySet:
    """Fuzzy subset of the state index set 0..n-1"""

    __slots__ = ("lattice", "values", "_hash")

    def __init__(self, lattice: Lattice, values: Iterable, trusted: bool = False):
        self.lattice = lattice
        if trusted:
            self.values = tuple(values)
        else:
            self.values = tuple(lattice.coerce(v) for v in values)
        if not self.values:
            raise DimensionMismatch("Fuzzy sets over an empty state set are not supported")
        # Fraction and int hashes are canonical, so equal vectors hash equal
        self._hash = hash(self.values)

    @classmethod
    def indicator(cls, lattice: Lattice, n: int, index: int) -> FuzzySet:
        """Crisp singleton {index}"""
        return cls(lattice, [lattice.one if i == index else lattice.zero for i in range(n)],
                   trusted=True)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, index: int) -> TruthValue:
        return self.values[index]

    def __iter__(self) -> Iterator[TruthValue]:
        return iter(self.values)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FuzzySet):
            return NotImplemented
        return self.lattice == other.lattice and self.values == other.values

    def __hash__(self) -> int:
        return self._hash

    def format(self) -> str:
        return "[" + " ".join(self.lattice.format_value(v) for v in self.values) + "]"

    def __repr__(self):
        return f"FuzzySet({self.lattice.name}, {self.format()})"


class FuzzyRelation:
    """Fuzzy relation between two finite state index sets, stored as a dense matrix"""

    __slots__ = ("lattice", "entries", "_hash")

    def __init__(self, lattice: Lattice, rows: Iterable[Iterable], trusted: bool = False):
        self.lattice = lattice
        if trusted:
            self.entries = tuple(tuple(row) for row in rows)
        else:
            self.entries = tuple(tuple(lattice.coerce(v) for v in row) for row in rows)
        if not self.entries or not self.entries[0]:
            raise DimensionMismatch("Fuzzy relations over an empty state set are not supported")
        width = len(self.entries[0])
        if any(len(row) != width for row in self.entries):
            raise DimensionMismatch("All rows of a relation must have the same length")
        self._hash = hash(self.entries)

    @classmethod
    def identity(cls, lattice: Lattice, n: int) -> FuzzyRelation:
        """Crisp equality Δ on n states"""
        return cls(lattice, [[lattice.one if i == j else lattice.zero for j in range(n)]
                             for i in range(n)], trusted=True)

    @classmethod
    def full(cls, lattice: Lattice, n: int, m: Optional[int] = None) -> FuzzyRelation:
        return cls(lattice, [[lattice.one] * (n if m is None else m) for _ in range(n)],
                   trusted=True)

    @classmethod
    def from_function(cls, lattice: Lattice, n: int, targets: Sequence[int]) -> FuzzyRelation:
        """Crisp relation i -> targets[i]"""
        return cls(lattice, [[lattice.one if targets[i] == j else lattice.zero
                              for j in range(n)] for i in range(n)], trusted=True)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index: int) -> Tuple[TruthValue, ...]:
        return self.entries[index]

    def row(self, i: int) -> FuzzySet:
        """Afterset of state i"""
        return FuzzySet(self.lattice, self.entries[i], trusted=True)

    def transpose(self) -> FuzzyRelation:
        return FuzzyRelation(self.lattice, zip(*self.entries), trusted=True)

    def restrict(self, indices: Sequence[int]) -> FuzzyRelation:
        """Sub-matrix on the given rows and columns"""
        return FuzzyRelation(self.lattice, [[self.entries[i][j] for j in indices]
                                            for i in indices], trusted=True)

    def meet(self, other: FuzzyRelation) -> FuzzyRelation:
        """Pointwise meet"""
        if self.lattice != other.lattice:
            raise KindMismatch(f"Cannot meet {self.lattice.name} with {other.lattice.name}")
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch(f"Cannot meet {self.rows}x{self.cols} "
                                    f"with {other.rows}x{other.cols}")
        lat = self.lattice
        return FuzzyRelation(lat, [[lat._meet(x, y) for x, y in zip(r1, r2)]
                                   for r1, r2 in zip(self.entries, other.entries)],
                             trusted=True)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FuzzyRelation):
            return NotImplemented
        return self.lattice == other.lattice and self.entries == other.entries

    def __hash__(self) -> int:
        return self._hash

    def to_frame(self, names: Optional[Sequence[str]] = None) -> pd.DataFrame:
        """Matrix as a DataFrame of formatted values, states as index and columns"""
        row_names = list(names) if names is not None else list(state_names(self.rows))
        col_names = list(names) if names is not None else list(state_names(self.cols))
        if len(row_names) != self.rows or len(col_names) != self.cols:
            raise DimensionMismatch("Need one name per state")
        data: List[List[str]] = [[self.lattice.format_value(v) for v in row]
                                 for row in self.entries]
        return pd.DataFrame(data, index=row_names, columns=col_names)

    def format(self) -> str:
        return "[" + ", ".join("[" + " ".join(self.lattice.format_value(v) for v in row) + "]"
                               for row in self.entries) + "]"

    def __repr__(self):
        return f"FuzzyRelation({self.lattice.name}, {self.format()})"


def ensure_same_lattice(*items) -> Lattice:
    """Shared lattice of sets/relations, KindMismatch otherwise"""
    lattice = items[0].lattice
    for item in items[1:]:
        if item.lattice != lattice:
            raise KindMismatch(f"Mixed lattices {lattice.name} and {item.lattice.name}")
    return lattice

