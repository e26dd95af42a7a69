from fractions import Fraction

import pytest

from conftest import FIXTURES, fixture_path
from fza_format import (load_automaton, load_relation, parse_automaton, parse_automaton_file,
                        parse_relation, serialize_automaton)
from models.automaton import FuzzyAutomaton
from models.errors import DuplicateSection, FormatError, FzaSyntaxError, SemanticError
from models.lattice import Lattice

E1_TEXT = """\
lattice boolean
states 3
alphabet x y
initial 1 0 0
terminal 0 1 1
trans x
0 1 0
1 0 1
1 0 0
trans y
0 0 1
1 1 0
0 1 0
"""


def test_parse_first_example():
    a = parse_automaton(E1_TEXT)
    assert a.n == 3
    assert a.lattice.name == "boolean"
    assert a.alphabet == ("x", "y")
    assert a.delta["y"][1] == (1, 1, 0)


@pytest.mark.parametrize("path", sorted(FIXTURES.glob("*.fza")), ids=lambda p: p.stem)
def test_round_trip(path):
    a = load_automaton(str(path)).automaton
    assert parse_automaton(serialize_automaton(a)) == a


def test_decimal_is_exact_rational():
    a = load_automaton(fixture_path("e6_product_infinite_nerode.fza")).automaton
    assert a.delta["x"][0][1] == Fraction(1, 2)
    assert "0.5" in serialize_automaton(a)


def test_line_map():
    parsed = parse_automaton_file("# leading comment\n" + E1_TEXT, "e1.fza")
    assert parsed.line_map["lattice"] == 2
    assert parsed.line_map["trans y"] == 11
    assert parsed.path == "e1.fza"


def test_names_and_trans_order():
    text = """\
lattice godel
states 2 p q
alphabet a b
initial 1 0
terminal 0 0.25
trans b   # blocks in any order
0 1
1 0
trans a
1 1/3
0 1
"""
    a = parse_automaton(text)
    assert a.state_names == ("p", "q")
    assert a.delta["a"][0][1] == Fraction(1, 3)
    assert a.tau[1] == Fraction(1, 4)
    assert "states 2 p q" in serialize_automaton(a)
    assert parse_automaton(serialize_automaton(a)) == a


def test_chain_values():
    text = "lattice chain:3\nstates 1\nalphabet x\ninitial a3\nterminal a1\ntrans x\na2\n"
    a = parse_automaton(text)
    assert a.sigma[0] == 3 and a.tau[0] == 1
    assert "initial a3" in serialize_automaton(a)


def test_carrier_violation_has_line():
    with pytest.raises(SemanticError) as info:
        parse_automaton(E1_TEXT.replace("initial 1 0 0", "initial 1.5 0 0"))
    assert info.value.line == 4
    assert str(info.value).startswith("line 4:")


def test_wrong_section_order():
    swapped = E1_TEXT.replace("initial 1 0 0\nterminal 0 1 1", "terminal 0 1 1\ninitial 1 0 0")
    with pytest.raises(FzaSyntaxError):
        parse_automaton(swapped)


def test_duplicate_sections():
    with pytest.raises(DuplicateSection):
        parse_automaton(E1_TEXT + "trans x\n0 1 0\n1 0 1\n1 0 0\n")
    with pytest.raises(DuplicateSection):
        parse_automaton(E1_TEXT + "terminal 0 1 1\n")


@pytest.mark.parametrize("broken,error", [
    (E1_TEXT.replace("lattice boolean", "lattice fuzzy"), SemanticError),
    (E1_TEXT.replace("states 3", "states three"), FzaSyntaxError),
    (E1_TEXT.replace("initial 1 0 0", "initial 1 0"), SemanticError),
    (E1_TEXT.replace("trans y", "trans z"), SemanticError),
    (E1_TEXT.split("trans y")[0], SemanticError),
    (E1_TEXT.replace("1 1 0\n0 1 0\n", "1 1 0\n"), FzaSyntaxError),
    ("", FzaSyntaxError),
])
def test_rejects(broken, error):
    with pytest.raises(error):
        parse_automaton(broken)


def test_relation_file(tmp_path):
    boolean = Lattice.from_name("boolean")
    path = tmp_path / "phi.txt"
    path.write_text("# wri of e1\n1 0 0\n1 1 1\n0 0 1\n", encoding="utf-8")
    relation = load_relation(str(path), boolean, 3)
    assert relation.entries[1] == (1, 1, 1)
    with pytest.raises(FormatError):
        parse_relation("1 0\n0 1\n", boolean, 3)
    with pytest.raises(FormatError):
        parse_relation("1 0 0\n0 1 0\n0 0 1\n1 1 1\n", boolean, 3)


def test_multi_letter_symbols_and_names_round_trip():
    g = Lattice.from_name("godel")
    a = FuzzyAutomaton(g, ["ab", "c"], [1, 0], {"ab": [[0, "1/2"], [1, 0]], "c": [[1, 1], [0, 0]]},
                       ["0.25", 1], ["start", "q_1"])
    again = parse_automaton(serialize_automaton(a))
    assert again == a
    assert again.state_names == ("start", "q_1")
