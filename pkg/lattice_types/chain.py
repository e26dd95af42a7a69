"""
Chain lattice - the finite chain a_0 < a_1 < ... < a_n with Łukasiewicz-style operations
"""
from models.errors import FuzzyAutomataError, IncompatibleValue
from models.lattice import Lattice, LatticeTag, TruthValue


class ChainLattice(Lattice):
    """Finite chain with n + 1 elements, values stored as indices 0..n"""
    tag = LatticeTag.CHAIN

    def __init__(self, n: int):
        if isinstance(n, bool) or not isinstance(n, int) or n < 1:
            raise FuzzyAutomataError(f"Chain length must be at least 1, got {n!r}")
        self.n = n

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return self.n

    @property
    def name(self) -> str:
        return f"{self.tag.value}:{self.n}"

    def contains(self, x) -> bool:
        return isinstance(x, int) and not isinstance(x, bool) and 0 <= x <= self.n

    def coerce(self, x) -> int:
        if isinstance(x, str):
            text = x.strip().lower()
            if text.startswith("a"):
                text = text[1:]
            if not text.isdigit():
                raise IncompatibleValue(f"{x!r} is not a chain index")
            x = int(text)
        if not self.contains(x):
            raise IncompatibleValue(f"{x!r} is not an element of {self.name}")
        return x

    def format_value(self, x: TruthValue) -> str:
        return f"a{self.check(x)}"

    def json_value(self, x: TruthValue) -> int:
        return self.check(x)

    def _tensor(self, x, y):
        return max(x + y - self.n, 0)

    def _residuum(self, x, y):
        return min(self.n - x + y, self.n)
