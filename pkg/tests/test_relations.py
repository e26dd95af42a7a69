from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import crisp
from models.errors import DimensionMismatch, KindMismatch
from models.fuzzy import FuzzyRelation, FuzzySet
from models.lattice import Lattice
from utils.relations import (compose_rr, compose_rs, compose_sr, distinct_rows, dot,
                             is_quasi_order, is_reflexive, is_transitive, leq,
                             residual_left_rel, residual_left_set, residual_right_rel,
                             residual_right_set)

HALF = Fraction(1, 2)
KINDS = ["boolean", "godel", "product", "lukasiewicz"]


def fset(lattice, values):
    return FuzzySet(lattice, [Fraction(v) for v in values])


def test_compose_example(boolean):
    a = crisp(boolean, [[0, 1], [1, 0]])
    b = crisp(boolean, [[1, 1], [0, 1]])
    assert compose_rr(a, b) == crisp(boolean, [[0, 1], [1, 1]])
    assert compose_sr(fset(boolean, [1, 0]), a) == fset(boolean, [0, 1])
    assert compose_rs(a, fset(boolean, [1, 0])) == fset(boolean, [0, 1])
    assert dot(fset(boolean, [1, 0]), fset(boolean, [0, 1])) == 0


def test_product_composition():
    p = Lattice.from_name("product")
    a = FuzzyRelation(p, [["1/2", 1], [0, "1/2"]])
    assert compose_rr(a, a) == FuzzyRelation(p, [["1/4", "1/2"], [0, "1/4"]])


def test_residual_sets_follow_definition(boolean):
    tau = fset(boolean, [0, 1, 1])
    assert residual_right_set(tau, tau) == crisp(boolean, [[1, 1, 1], [0, 1, 1], [0, 1, 1]])
    assert residual_left_set(tau, tau) == crisp(boolean, [[1, 0, 0], [1, 1, 1], [1, 1, 1]])


def test_residual_left_set_of_single_terminal():
    tau = fset(Lattice.from_name("boolean"), [0, 1, 0])
    assert residual_left_set(tau, tau) == crisp(tau.lattice, [[1, 0, 1], [1, 1, 1], [1, 0, 1]])


def test_mixed_lattices_rejected(boolean):
    g = Lattice.from_name("godel")
    with pytest.raises(KindMismatch):
        compose_rr(crisp(boolean, [[1]]), crisp(g, [[1]]))


def test_shape_mismatch_rejected(boolean):
    with pytest.raises(DimensionMismatch):
        compose_rr(crisp(boolean, [[1, 0]]), crisp(boolean, [[1, 0]]))
    with pytest.raises(DimensionMismatch):
        dot(fset(boolean, [1]), fset(boolean, [1, 0]))


def test_quasi_order_predicates(boolean):
    order = crisp(boolean, [[1, 1, 1], [0, 1, 1], [0, 0, 1]])
    assert is_quasi_order(order)
    not_transitive = crisp(boolean, [[1, 1, 0], [0, 1, 1], [0, 0, 1]])
    assert is_reflexive(not_transitive)
    assert not is_transitive(not_transitive)
    assert not is_reflexive(crisp(boolean, [[0, 1], [0, 1]]))


def test_distinct_rows(boolean):
    partition = distinct_rows(crisp(boolean, [[1, 1, 0], [1, 1, 0], [0, 0, 1]]))
    assert partition.count == 2
    assert partition.groups == [(0, 1), (2,)]
    assert partition.representatives == [0, 2]


def test_leq_pointwise(boolean):
    assert leq(crisp(boolean, [[0, 1]]), crisp(boolean, [[1, 1]]))
    assert not leq(crisp(boolean, [[1, 0]]), crisp(boolean, [[0, 1]]))


# Random relations over the rational kinds

VALUES = [Fraction(0), Fraction(1, 4), HALF, Fraction(3, 4), Fraction(1)]


@st.composite
def relations(draw, n=3):
    kind = draw(st.sampled_from(KINDS))
    lat = Lattice.from_name(kind)
    pool = [v for v in VALUES if lat.contains(v)]
    rows = [[draw(st.sampled_from(pool)) for _ in range(n)] for _ in range(n)]
    return FuzzyRelation(lat, rows)


@st.composite
def relation_triples(draw):
    first = draw(relations())
    pool = [v for v in VALUES if first.lattice.contains(v)]

    def more():
        return FuzzyRelation(first.lattice, [[draw(st.sampled_from(pool)) for _ in range(3)]
                                             for _ in range(3)])
    return first, more(), more()


@settings(max_examples=100, derandomize=True, deadline=None)
@given(relation_triples())
def test_composition_is_associative(triple):
    a, b, c = triple
    assert compose_rr(compose_rr(a, b), c) == compose_rr(a, compose_rr(b, c))


@settings(max_examples=100, derandomize=True, deadline=None)
@given(relation_triples(), st.data())
def test_set_composition_is_associative(triple, data):
    a, b, _ = triple
    pool = [v for v in VALUES if a.lattice.contains(v)]
    f = FuzzySet(a.lattice, data.draw(st.lists(st.sampled_from(pool), min_size=3, max_size=3)))
    assert compose_sr(compose_sr(f, a), b) == compose_sr(f, compose_rr(a, b))
    assert compose_rs(a, compose_rs(b, f)) == compose_rs(compose_rr(a, b), f)


@settings(max_examples=100, derandomize=True, deadline=None)
@given(relations(n=4), st.permutations(range(4)))
def test_distinct_rows_ignores_row_order(a, order):
    shuffled = FuzzyRelation(a.lattice, [a[i] for i in order])
    before = distinct_rows(a)
    after = distinct_rows(shuffled)
    assert after.count == before.count
    assert ({frozenset(order[k] for k in group) for group in after.groups}
            == {frozenset(group) for group in before.groups})


@settings(max_examples=100, derandomize=True, deadline=None)
@given(relation_triples())
def test_residuals_are_adjoint(triple):
    a, b, c = triple
    # a∘b ≤ c  iff  b ≤ a\c  iff  a ≤ c/b
    composed = leq(compose_rr(a, b), c)
    assert composed == leq(b, residual_right_rel(a, c))
    assert composed == leq(a, residual_left_rel(c, b))


@settings(max_examples=100, derandomize=True, deadline=None)
@given(relations())
def test_self_residuals_are_quasi_orders(a):
    assert is_quasi_order(residual_right_rel(a, a))
    assert is_quasi_order(residual_left_rel(a, a))


def test_residual_brute_force():
    lat = Lattice.from_name("godel")
    a = FuzzyRelation(lat, [[1, "1/2"], [0, "1/4"]])
    b = FuzzyRelation(lat, [["1/4", 1], ["1/2", 0]])
    right = residual_right_rel(a, b)
    left = residual_left_rel(b, a)
    for i, j in product(range(2), repeat=2):
        assert right[i][j] == min(lat.residuum(a[k][i], b[k][j]) for k in range(2))
        assert left[i][j] == min(lat.residuum(a[j][k], b[i][k]) for k in range(2))
