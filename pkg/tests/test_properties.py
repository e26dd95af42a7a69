"""
Property suite over random small automata (boolean and Gödel, values 0, 1/2, 1)
"""
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from determinization_types import children, determinize_phi, determinize_psi, nerode, reverse_nerode
from models.automaton import FuzzyAutomaton
from models.cdfa import cdfa_homomorphism, cdfa_isomorphic
from models.det_method import DetMethod
from models.fuzzy import FuzzyRelation
from models.lattice import Lattice
from utils.equivalence import first_disagreement
from utils.invariants import (check_left_invariant, check_right_invariant,
                              check_weakly_left_invariant, check_weakly_right_invariant,
                              greatest_left_invariant, greatest_right_invariant,
                              greatest_weakly_left_invariant, greatest_weakly_right_invariant,
                              sigma_family, tau_family)
from utils.minimization import minimize_cdfa
from utils.relations import compose_rs, compose_sr, is_quasi_order, leq

KINDS = ["boolean", "godel"]
VALUES = [Fraction(0), Fraction(1, 2), Fraction(1)]
ALPHABET = ["x", "y"]
METHODS = [m for m in DetMethod.NAMES if m not in ("phi", "psi", "children")]

PROPERTY_SETTINGS = settings(max_examples=100, derandomize=True, deadline=None)


@st.composite
def automata(draw, kind):
    lat = Lattice.from_name(kind)
    pool = [v for v in VALUES if lat.contains(v)]
    n = draw(st.integers(min_value=1, max_value=4))

    def vector():
        return [draw(st.sampled_from(pool)) for _ in range(n)]

    delta = {x: [vector() for _ in range(n)] for x in ALPHABET}
    return FuzzyAutomaton(lat, ALPHABET, vector(), delta, vector())


def for_each_kind(test):
    return pytest.mark.parametrize("kind", KINDS)(test)


@for_each_kind
@PROPERTY_SETTINGS
@given(data=st.data())
def test_every_method_is_equivalent(kind, data):
    a = data.draw(automata(kind))
    for name in METHODS:
        method = DetMethod.from_name(name)
        result = method.run(a)
        assert first_disagreement(a, result.cdfa, 6, reverse=method.reverses_language) is None, name


@for_each_kind
@PROPERTY_SETTINGS
@given(data=st.data())
def test_size_orderings(kind, data):
    a = data.draw(automata(kind))
    sizes = {name: DetMethod.from_name(name).run(a).size for name in METHODS}
    for name in METHODS:
        if not DetMethod.from_name(name).reverses_language:
            assert sizes["brzozowski"] <= sizes[name], name
    assert sizes["ri"] <= sizes["nerode"]
    assert sizes["li"] <= sizes["reverse-nerode"]
    assert sizes["children-nerode"] <= sizes["nerode"]
    assert sizes["children-ri"] <= sizes["ri"]
    assert sizes["children-wri"] <= sizes["wri"]
    assert sizes["children-ri"] <= sizes["children-nerode"]


@for_each_kind
@PROPERTY_SETTINGS
@given(data=st.data())
def test_homomorphic_images(kind, data):
    a = data.draw(automata(kind))
    full = nerode(a).cdfa
    ri = greatest_right_invariant(a).relation
    a_ri = determinize_phi(a, ri).cdfa
    assert cdfa_homomorphism(full, a_ri) is not None
    assert cdfa_homomorphism(a_ri, children(a, ri).cdfa) is not None
    assert cdfa_isomorphic(minimize_cdfa(full), DetMethod.from_name("brzozowski").run(a).cdfa)


@for_each_kind
@PROPERTY_SETTINGS
@given(data=st.data())
def test_constructed_quasi_orders_pass_their_checks(kind, data):
    a = data.draw(automata(kind))
    ri = greatest_right_invariant(a)
    li = greatest_left_invariant(a)
    wri = greatest_weakly_right_invariant(a).relation
    wli = greatest_weakly_left_invariant(a).relation
    for relation in (ri.relation, li.relation, wri, wli):
        assert is_quasi_order(relation)
    assert check_right_invariant(a, ri.relation)
    assert check_left_invariant(a, li.relation)
    assert check_weakly_right_invariant(a, wri)
    assert check_weakly_left_invariant(a, wli)
    assert leq(ri.relation, wri) and leq(li.relation, wli)
    for report in (ri, li):
        for earlier, later in zip(report.sequence, report.sequence[1:]):
            assert leq(later, earlier)


@for_each_kind
@PROPERTY_SETTINGS
@given(data=st.data())
def test_afterset_automata(kind, data):
    a = data.draw(automata(kind))
    wri = greatest_weakly_right_invariant(a).relation
    wli = greatest_weakly_left_invariant(a).relation
    by_wri = a.afterset_automaton(wri)
    by_wli = a.afterset_automaton(wli)
    # A_φ is the Nerode automaton of the afterset automaton
    assert cdfa_isomorphic(determinize_phi(a, wri).cdfa, nerode(by_wri).cdfa)
    assert cdfa_isomorphic(children(a, wri).cdfa, children(by_wri, by_wri.identity).cdfa)
    # reducing by wli leaves the Nerode automaton unchanged
    assert cdfa_isomorphic(nerode(by_wli).cdfa, nerode(a).cdfa)
    assert cdfa_isomorphic(determinize_psi(a, wli).cdfa, reverse_nerode(by_wli).cdfa)


@for_each_kind
@PROPERTY_SETTINGS
@given(data=st.data())
def test_weak_quasi_orders_fix_their_families(kind, data):
    a = data.draw(automata(kind))
    wri = greatest_weakly_right_invariant(a).relation
    wli = greatest_weakly_left_invariant(a).relation
    for t in tau_family(a):
        assert compose_rs(wri, t) == t
    for s in sigma_family(a):
        assert compose_sr(s, wli) == s


@st.composite
def reflexive_relations(draw, lattice, n):
    return FuzzyRelation(lattice, [[lattice.one if i == j else draw(st.sampled_from(VALUES))
                                    for j in range(n)] for i in range(n)])


@PROPERTY_SETTINGS
@given(data=st.data())
def test_greatest_quasi_orders_on_godel_automata(data):
    a = data.draw(automata("godel"))
    candidates = [data.draw(reflexive_relations(a.lattice, a.n)) for _ in range(4)]
    for greatest, check in [(greatest_right_invariant, check_right_invariant),
                            (greatest_left_invariant, check_left_invariant),
                            (greatest_weakly_right_invariant, check_weakly_right_invariant),
                            (greatest_weakly_left_invariant, check_weakly_left_invariant)]:
        top = greatest(a).relation
        assert check(a, top)
        for relation in candidates:
            if check(a, relation):
                assert leq(relation, top), greatest.__name__
