from fractions import Fraction

import pytest

from conftest import crisp
from models.automaton import FuzzyAutomaton, validate_components
from models.errors import (CarrierViolation, DimensionMismatch, FuzzyAutomataError, NotQuasiOrder,
                           UnknownSymbol)
from models.fuzzy import FuzzySet
from models.lattice import Lattice
from models.word import format_word, parse_word, words_up_to


def test_language_degree_e1(e1):
    assert e1.language_degree(()) == 0
    assert e1.language_degree(("x",)) == 1
    assert e1.language_degree(("y",)) == 1
    assert e1.language_degree(("y", "x")) == 0


def test_sigma_u_and_tau_u(e1):
    assert e1.sigma_u(("x",)) == FuzzySet(e1.lattice, [0, 1, 0])
    assert e1.sigma_u(("y", "x")) == e1.sigma
    assert e1.tau_u(()) == e1.tau
    # degree via either side agrees
    for word in words_up_to(e1.alphabet, 3):
        prefix, suffix = word[:1], word[1:]
        left = e1.sigma_u(prefix)
        right = e1.tau_u(suffix)
        assert e1.language_degree(word) == max(min(l, r) for l, r in zip(left, right))


def test_delta_word_of_empty_word_is_identity(e1):
    assert e1.delta_word(()) == e1.identity


def test_unknown_symbol(e1):
    with pytest.raises(UnknownSymbol):
        e1.language_degree(("z",))


def test_product_degrees(e6):
    assert e6.sigma_u(("x",)) == FuzzySet(e6.lattice, [0, "1/2", 1])
    assert e6.sigma_u(("x", "x")) == FuzzySet(e6.lattice, [0, 1, "1/2"])
    assert e6.sigma_u(("x", "x", "x")) == FuzzySet(e6.lattice, [0, 1, "1/4"])
    assert e6.language_degree(("x",)) == Fraction(1, 2)


def test_validation_collects_every_problem(boolean):
    errors = validate_components(boolean, ["x"], [1, 0], {"x": [[1, 0], [0, 2]], "y": [[1]]},
                                 [0, 1, 1])
    kinds = {type(e) for e in errors}
    assert CarrierViolation in kinds
    assert UnknownSymbol in kinds
    assert DimensionMismatch in kinds


def test_constructor_raises_first_problem(boolean):
    with pytest.raises(CarrierViolation):
        FuzzyAutomaton(boolean, ["x"], [1, "1/2"], {"x": [[1, 0], [0, 1]]}, [0, 1])
    with pytest.raises(DimensionMismatch):
        FuzzyAutomaton(boolean, ["x", "y"], [1, 0], {"x": [[1, 0], [0, 1]]}, [0, 1])


@pytest.mark.parametrize("alphabet,names", [
    (["trans"], None),
    (["initial"], None),
    (["x y"], None),
    (["x#"], None),
    ([""], None),
    (["x"], ["a 1", "a2"]),
    (["x"], ["a1", "#a2"]),
])
def test_symbols_and_names_must_be_plain_tokens(boolean, alphabet, names):
    delta = {symbol: [[1, 0], [0, 1]] for symbol in alphabet}
    with pytest.raises(FuzzyAutomataError):
        FuzzyAutomaton(boolean, alphabet, [1, 0], delta, [0, 1], names)


def test_reverse_swaps_sides(e1):
    reversed_a = e1.reverse()
    assert reversed_a.sigma == e1.tau
    assert reversed_a.tau == e1.sigma
    assert reversed_a.delta["x"] == e1.delta["x"].transpose()
    for word in words_up_to(e1.alphabet, 4):
        assert reversed_a.language_degree(word[::-1]) == e1.language_degree(word)


def test_afterset_automaton_needs_quasi_order(e1):
    with pytest.raises(NotQuasiOrder):
        e1.afterset_automaton(crisp(e1.lattice, [[1, 1, 0], [0, 1, 1], [0, 0, 1]]))


def test_afterset_automaton_e5(e5):
    from utils.invariants import greatest_right_invariant

    reduced = e5.afterset_automaton(greatest_right_invariant(e5).relation)
    assert reduced.n == 4
    for word in words_up_to(e5.alphabet, 5):
        assert reduced.language_degree(word) == e5.language_degree(word)


def test_equality_and_names(e1):
    renamed = FuzzyAutomaton(e1.lattice, e1.alphabet, e1.sigma, e1.delta, e1.tau, ["p", "q", "r"])
    assert renamed != e1
    assert renamed.state_names == ("p", "q", "r")
    assert e1.state_names == ("a1", "a2", "a3")


def test_parse_word_forms():
    assert parse_word("xy", ["x", "y"]) == ("x", "y")
    assert parse_word("x y", ["x", "y"]) == ("x", "y")
    assert parse_word("ab,c", ["ab", "c"]) == ("ab", "c")
    assert parse_word("ε", ["x"]) == ()
    assert parse_word("", ["x"]) == ()
    with pytest.raises(UnknownSymbol):
        parse_word("xz", ["x", "y"])


def test_words_in_military_order():
    assert list(words_up_to(["x", "y"], 2)) == [
        (), ("x",), ("y",), ("x", "x"), ("x", "y"), ("y", "x"), ("y", "y")]


def test_format_word():
    assert format_word(()) == "ε"
    assert format_word(("x", "x", "y")) == "x²y"
    assert format_word(("ab", "c")) == "ab·c"


def test_godel_automaton_over_decimals():
    g = Lattice.from_name("godel")
    a = FuzzyAutomaton(g, ["x"], ["0.5", 1], {"x": [["0.3", 1], [0, "0.7"]]}, [1, "0.2"])
    assert a.language_degree(()) == Fraction(1, 2)
    assert a.sigma_u(("x",)) == FuzzySet(g, ["0.3", "0.7"])
    assert a.language_degree(("x",)) == Fraction(3, 10)
