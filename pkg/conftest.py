"""
Shared pytest fixtures - the worked automata under fixtures/
"""
from fractions import Fraction
from pathlib import Path

import pytest

from fza_format import load_automaton
from models.fuzzy import FuzzyRelation
from models.lattice import Lattice

FIXTURES = Path(__file__).parent / "fixtures"


def fixture_path(name: str) -> str:
    return str(FIXTURES / name)


def crisp(lattice: Lattice, rows) -> FuzzyRelation:
    """Relation from a matrix of ints/Fractions"""
    return FuzzyRelation(lattice, [[Fraction(v) for v in row] for row in rows])


@pytest.fixture
def boolean():
    return Lattice.from_name("boolean")


@pytest.fixture
def e1():
    return load_automaton(fixture_path("e1_wri_smaller.fza")).automaton


@pytest.fixture
def e2():
    return load_automaton(fixture_path("e2_children_beats_ri.fza")).automaton


@pytest.fixture
def e3():
    return load_automaton(fixture_path("e3_ri_beats_children.fza")).automaton


@pytest.fixture
def e4():
    return load_automaton(fixture_path("e4_nerode_not_minimal.fza")).automaton


@pytest.fixture
def e5():
    return load_automaton(fixture_path("e5_reduction_without_det_gain.fza")).automaton


@pytest.fixture
def e6():
    return load_automaton(fixture_path("e6_product_infinite_nerode.fza")).automaton
