"""
.fza file format - reading and writing fuzzy automata (and plain relation files)

    lattice <boolean|godel|product|lukasiewicz|chain:<n>>
    states <n> [name1 ... namen]
    alphabet <sym>+
    initial <n values>
    terminal <n values>
    trans <sym>          (one block per symbol, n rows of n values)

'#' starts a comment. Values are integers, decimals, fractions p/q or a<k> for chains.
"""
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Tuple

from models.automaton import RESERVED_SYMBOLS, FuzzyAutomaton
from models.errors import (DuplicateSection, FuzzyAutomataError, FzaSyntaxError, IncompatibleValue,
                           SemanticError)
from models.fuzzy import FuzzyRelation, state_names
from models.lattice import Lattice, TruthValue

HEADER_SECTIONS = ["lattice", "states", "alphabet", "initial", "terminal"]
KEYWORDS = RESERVED_SYMBOLS


class AutomatonFile:
    """A parsed automaton with the line of every section, for error reporting"""

    def __init__(self, automaton: FuzzyAutomaton, path: Optional[str] = None,
                 line_map: Optional[Dict[str, int]] = None):
        self.automaton = automaton
        self.path = path
        self.line_map = line_map or {}

    def __repr__(self):
        return f"AutomatonFile({self.path!r}, {self.automaton!r})"


def _logical_lines(text: str) -> Iterator[Tuple[int, List[str]]]:
    for number, raw in enumerate(text.lstrip("﻿").splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if tokens:
            yield number, tokens


def _values(lattice: Lattice, tokens: List[str], n: int, line: int, what: str) -> List[TruthValue]:
    if len(tokens) != n:
        raise SemanticError(f"{what} needs {n} values, got {len(tokens)}", line)
    values = []
    for token in tokens:
        try:
            values.append(lattice.coerce(token))
        except IncompatibleValue as exc:
            raise SemanticError(f"carrier violation in {what}: {exc}", line)
    return values


def parse_automaton_file(text: str, path: Optional[str] = None) -> AutomatonFile:
    """Parse .fza text, raising the first problem with its line number"""
    lines = list(_logical_lines(text))
    line_map: Dict[str, int] = {}
    header: Dict[str, List[str]] = {}
    position = 0

    # Header sections in fixed order
    for expected in HEADER_SECTIONS:
        if position >= len(lines):
            raise FzaSyntaxError(f"missing section {expected!r}", lines[-1][0] if lines else None)
        number, tokens = lines[position]
        keyword = tokens[0]
        if keyword in header:
            raise DuplicateSection(f"section {keyword!r} appears twice", number)
        if keyword != expected:
            raise FzaSyntaxError(f"expected section {expected!r}, found {keyword!r}", number)
        header[keyword] = tokens[1:]
        line_map[keyword] = number
        position += 1

    try:
        if len(header["lattice"]) != 1:
            raise FzaSyntaxError("lattice takes exactly one name", line_map["lattice"])
        lattice = Lattice.from_name(header["lattice"][0])
    except FzaSyntaxError:
        raise
    except FuzzyAutomataError as exc:
        raise SemanticError(str(exc), line_map["lattice"])

    states = header["states"]
    if not states or not states[0].isdigit():
        raise FzaSyntaxError("states needs a state count", line_map["states"])
    n = int(states[0])
    if n < 1:
        raise SemanticError("an automaton needs at least one state", line_map["states"])
    names = states[1:] or None
    if names is not None and (len(names) != n or len(set(names)) != n):
        raise SemanticError(f"expected {n} distinct state names", line_map["states"])

    alphabet = header["alphabet"]
    if not alphabet:
        raise FzaSyntaxError("alphabet needs at least one symbol", line_map["alphabet"])
    if len(set(alphabet)) != len(alphabet):
        raise SemanticError("alphabet contains duplicate symbols", line_map["alphabet"])
    if any(symbol in KEYWORDS for symbol in alphabet):
        raise SemanticError("section keywords cannot be used as symbols", line_map["alphabet"])

    sigma = _values(lattice, header["initial"], n, line_map["initial"], "initial")
    tau = _values(lattice, header["terminal"], n, line_map["terminal"], "terminal")

    # Transition blocks
    delta: Dict[str, List[List[TruthValue]]] = {}
    while position < len(lines):
        number, tokens = lines[position]
        if tokens[0] in HEADER_SECTIONS:
            raise DuplicateSection(f"section {tokens[0]!r} appears twice", number)
        if tokens[0] != "trans" or len(tokens) != 2:
            raise FzaSyntaxError("expected 'trans <symbol>'", number)
        symbol = tokens[1]
        if symbol not in alphabet:
            raise SemanticError(f"symbol {symbol!r} is not in the alphabet", number)
        if symbol in delta:
            raise DuplicateSection(f"transitions for {symbol!r} given twice", number)
        line_map[f"trans {symbol}"] = number
        position += 1
        rows = []
        for _ in range(n):
            if position >= len(lines) or lines[position][1][0] in KEYWORDS:
                raise FzaSyntaxError(f"trans {symbol} needs {n} rows", number)
            row_number, row_tokens = lines[position]
            rows.append(_values(lattice, row_tokens, n, row_number, f"trans {symbol}"))
            position += 1
        delta[symbol] = rows

    missing = [symbol for symbol in alphabet if symbol not in delta]
    if missing:
        raise SemanticError(f"no transitions for {', '.join(missing)}",
                            lines[-1][0] if lines else None)

    try:
        automaton = FuzzyAutomaton(lattice, alphabet, sigma, delta, tau, names, n)
    except FuzzyAutomataError as exc:
        raise SemanticError(str(exc))
    return AutomatonFile(automaton, path, line_map)


def parse_automaton(text: str) -> FuzzyAutomaton:
    return parse_automaton_file(text).automaton


def load_automaton(path: str) -> AutomatonFile:
    """Read an .fza file from disk"""
    text = Path(path).read_text(encoding="utf-8")
    return parse_automaton_file(text, str(path))


def serialize_automaton(a: FuzzyAutomaton) -> str:
    """Canonical .fza text; parse_automaton(serialize_automaton(a)) == a"""
    fmt = a.lattice.format_value
    states = f"states {a.n}"
    if a.state_names != state_names(a.n):
        states += " " + " ".join(a.state_names)
    lines = [
        f"lattice {a.lattice.name}",
        states,
        "alphabet " + " ".join(a.alphabet),
        "initial " + " ".join(fmt(v) for v in a.sigma),
        "terminal " + " ".join(fmt(v) for v in a.tau),
    ]
    for symbol in a.alphabet:
        lines.append(f"trans {symbol}")
        lines.extend(" ".join(fmt(v) for v in row) for row in a.delta[symbol].entries)
    return "\n".join(lines) + "\n"


def parse_relation(text: str, lattice: Lattice, n: int) -> FuzzyRelation:
    """An n x n relation, one row per line"""
    rows = []
    for number, tokens in _logical_lines(text):
        if len(rows) == n:
            raise FzaSyntaxError(f"relation has more than {n} rows", number)
        rows.append(_values(lattice, tokens, n, number, "relation row"))
    if len(rows) != n:
        raise SemanticError(f"relation needs {n} rows, got {len(rows)}")
    return FuzzyRelation(lattice, rows, trusted=True)


def load_relation(path: str, lattice: Lattice, n: int) -> FuzzyRelation:
    return parse_relation(Path(path).read_text(encoding="utf-8"), lattice, n)
