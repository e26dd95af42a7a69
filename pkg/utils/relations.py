"""
Relation algebra - compositions, residuals, order tests and quasi-order predicates
"""
from typing import Dict, List, Tuple

from models.errors import DimensionMismatch
from models.fuzzy import FuzzyRelation, FuzzySet, ensure_same_lattice
from models.lattice import TruthValue


def compose_rr(a: FuzzyRelation, b: FuzzyRelation) -> FuzzyRelation:
    """(a∘b)(i,k) = ⋁_j a(i,j) ⊗ b(j,k)"""
    lat = ensure_same_lattice(a, b)
    if a.cols != b.rows:
        raise DimensionMismatch(f"Cannot compose {a.rows}x{a.cols} with {b.rows}x{b.cols}")
    columns = list(zip(*b.entries))
    return FuzzyRelation(lat, [[lat.join_all(lat._tensor(x, y) for x, y in zip(row, col))
                                for col in columns] for row in a.entries], trusted=True)


def compose_sr(f: FuzzySet, a: FuzzyRelation) -> FuzzySet:
    """(f∘a)(j) = ⋁_i f(i) ⊗ a(i,j)"""
    lat = ensure_same_lattice(f, a)
    if len(f) != a.rows:
        raise DimensionMismatch(f"Cannot compose a set of length {len(f)} "
                                f"with a {a.rows}x{a.cols} relation")
    return FuzzySet(lat, [lat.join_all(lat._tensor(x, y) for x, y in zip(f.values, col))
                          for col in zip(*a.entries)], trusted=True)


def compose_rs(a: FuzzyRelation, g: FuzzySet) -> FuzzySet:
    """(a∘g)(i) = ⋁_j a(i,j) ⊗ g(j)"""
    lat = ensure_same_lattice(a, g)
    if a.cols != len(g):
        raise DimensionMismatch(f"Cannot compose a {a.rows}x{a.cols} relation "
                                f"with a set of length {len(g)}")
    return FuzzySet(lat, [lat.join_all(lat._tensor(x, y) for x, y in zip(row, g.values))
                          for row in a.entries], trusted=True)


def dot(f: FuzzySet, g: FuzzySet) -> TruthValue:
    """Scalar composition ⋁_i f(i) ⊗ g(i)"""
    lat = ensure_same_lattice(f, g)
    if len(f) != len(g):
        raise DimensionMismatch(f"Cannot compose sets of length {len(f)} and {len(g)}")
    return lat.join_all(lat._tensor(x, y) for x, y in zip(f.values, g.values))


def _check_square_pair(a: FuzzyRelation, b: FuzzyRelation):
    lat = ensure_same_lattice(a, b)
    if not (a.is_square and b.is_square and a.rows == b.rows):
        raise DimensionMismatch(f"Residuals need square relations of one size, got "
                                f"{a.rows}x{a.cols} and {b.rows}x{b.cols}")
    return lat


def residual_right_rel(a: FuzzyRelation, b: FuzzyRelation) -> FuzzyRelation:
    """Right residual a\\b: (a\\b)(i,j) = ⋀_k a(k,i) → b(k,j)"""
    lat = _check_square_pair(a, b)
    a_cols = list(zip(*a.entries))
    b_cols = list(zip(*b.entries))
    return FuzzyRelation(lat, [[lat.meet_all(lat._residuum(x, y) for x, y in zip(ai, bj))
                                for bj in b_cols] for ai in a_cols], trusted=True)


def residual_left_rel(b: FuzzyRelation, a: FuzzyRelation) -> FuzzyRelation:
    """Left residual b/a: (b/a)(i,j) = ⋀_k a(j,k) → b(i,k)"""
    lat = _check_square_pair(a, b)
    return FuzzyRelation(lat, [[lat.meet_all(lat._residuum(x, y) for x, y in zip(aj, bi))
                                for aj in a.entries] for bi in b.entries], trusted=True)


def residual_right_set(f: FuzzySet, g: FuzzySet) -> FuzzyRelation:
    """f\\g: (f\\g)(i,j) = f(i) → g(j)"""
    lat = ensure_same_lattice(f, g)
    if len(f) != len(g):
        raise DimensionMismatch(f"Residual of sets of length {len(f)} and {len(g)}")
    return FuzzyRelation(lat, [[lat._residuum(x, y) for y in g.values] for x in f.values],
                         trusted=True)


def residual_left_set(g: FuzzySet, f: FuzzySet) -> FuzzyRelation:
    """g/f: (g/f)(j,i) = f(i) → g(j)"""
    lat = ensure_same_lattice(f, g)
    if len(f) != len(g):
        raise DimensionMismatch(f"Residual of sets of length {len(g)} and {len(f)}")
    return FuzzyRelation(lat, [[lat._residuum(x, y) for x in f.values] for y in g.values],
                         trusted=True)


def _pairs(a, b):
    ensure_same_lattice(a, b)
    if isinstance(a, FuzzySet) and isinstance(b, FuzzySet):
        if len(a) != len(b):
            raise DimensionMismatch(f"Cannot compare sets of length {len(a)} and {len(b)}")
        return zip(a.values, b.values)
    if isinstance(a, FuzzyRelation) and isinstance(b, FuzzyRelation):
        if (a.rows, a.cols) != (b.rows, b.cols):
            raise DimensionMismatch(f"Cannot compare {a.rows}x{a.cols} with {b.rows}x{b.cols}")
        return ((x, y) for ra, rb in zip(a.entries, b.entries) for x, y in zip(ra, rb))
    raise DimensionMismatch("Cannot compare a fuzzy set with a fuzzy relation")


def leq(a, b) -> bool:
    """Pointwise inclusion of sets or relations"""
    return all(x <= y for x, y in _pairs(a, b))


def eq(a, b) -> bool:
    """Exact pointwise equality"""
    return all(x == y for x, y in _pairs(a, b))


def _require_square(a: FuzzyRelation):
    if not a.is_square:
        raise DimensionMismatch(f"Expected a square relation, got {a.rows}x{a.cols}")


def is_reflexive(a: FuzzyRelation) -> bool:
    _require_square(a)
    one = a.lattice.one
    return all(a.entries[i][i] == one for i in range(a.rows))


def is_transitive(a: FuzzyRelation) -> bool:
    _require_square(a)
    return leq(compose_rr(a, a), a)


def is_quasi_order(a: FuzzyRelation) -> bool:
    return is_reflexive(a) and is_transitive(a)


def meet_all(relations: List[FuzzyRelation]) -> FuzzyRelation:
    """Pointwise meet of a non-empty family"""
    result = relations[0]
    for relation in relations[1:]:
        result = result.meet(relation)
    return result


class RowPartition:
    """Grouping of row indices by exact row equality"""

    def __init__(self, groups: List[Tuple[int, ...]]):
        self.groups = groups

    @property
    def count(self) -> int:
        return len(self.groups)

    @property
    def representatives(self) -> List[int]:
        """Smallest index of every group, in increasing order"""
        return [group[0] for group in self.groups]

    def __repr__(self):
        return f"RowPartition(count={self.count}, groups={self.groups})"


def distinct_rows(a: FuzzyRelation) -> RowPartition:
    """Pairwise distinct rows and the grouping of row indices by equality"""
    groups: Dict[Tuple[TruthValue, ...], List[int]] = {}
    for i, row in enumerate(a.entries):
        groups.setdefault(row, []).append(i)
    # dicts keep insertion order, so groups come sorted by representative
    return RowPartition([tuple(indices) for indices in groups.values()])
