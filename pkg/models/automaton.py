"""
Fuzzy automaton model - (states, alphabet, σ, {δ_x}, τ) over a residuated lattice
"""
from __future__ import annotations

from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from .errors import (CarrierViolation, DimensionMismatch, FuzzyAutomataError, IncompatibleValue,
                     KindMismatch, NotQuasiOrder, UnknownSymbol)
from .fuzzy import FuzzyRelation, FuzzySet, state_names as default_state_names
from .lattice import Lattice, TruthValue
from .word import check_word

RawSet = Union[FuzzySet, Sequence]
RawRelation = Union[FuzzyRelation, Sequence[Sequence]]

# .fza section keywords, never valid as symbols
RESERVED_SYMBOLS = frozenset({"lattice", "states", "alphabet", "initial", "terminal", "trans"})


def _is_plain_token(text) -> bool:
    """Non-empty string without whitespace or comment marker"""
    return isinstance(text, str) and text != "" and "#" not in text and text.split() == [text]


def _resolve_size(n, names, delta, tau, sigma) -> Optional[int]:
    if n is not None:
        return n
    if names is not None:
        return len(names)
    for relation in delta.values():
        return relation.rows if isinstance(relation, FuzzyRelation) else len(relation)
    for component in (tau, sigma):
        if component is not None:
            return len(component)
    return None


def _normalize_set(lattice: Lattice, raw: RawSet, n: int, what: str,
                   errors: List[FuzzyAutomataError]) -> Optional[FuzzySet]:
    if isinstance(raw, FuzzySet):
        if raw.lattice != lattice:
            errors.append(KindMismatch(f"{what} is over {raw.lattice.name}, "
                                       f"automaton over {lattice.name}"))
            return None
        values = list(raw.values)
    else:
        values = list(raw)
    if len(values) != n:
        errors.append(DimensionMismatch(f"{what} has length {len(values)}, expected {n}"))
        return None
    coerced = []
    for i, value in enumerate(values):
        try:
            coerced.append(lattice.coerce(value))
        except IncompatibleValue as exc:
            errors.append(CarrierViolation(f"{what}[{i}]: {exc}"))
    if len(coerced) != n:
        return None
    return FuzzySet(lattice, coerced, trusted=True)


def _normalize_relation(lattice: Lattice, raw: RawRelation, n: int, what: str,
                        errors: List[FuzzyAutomataError]) -> Optional[FuzzyRelation]:
    if isinstance(raw, FuzzyRelation):
        if raw.lattice != lattice:
            errors.append(KindMismatch(f"{what} is over {raw.lattice.name}, "
                                       f"automaton over {lattice.name}"))
            return None
        rows = [list(row) for row in raw.entries]
    else:
        rows = [list(row) for row in raw]
    if len(rows) != n or any(len(row) != n for row in rows):
        errors.append(DimensionMismatch(f"{what} must be {n}x{n}"))
        return None
    ok = True
    coerced = []
    for i, row in enumerate(rows):
        new_row = []
        for j, value in enumerate(row):
            try:
                new_row.append(lattice.coerce(value))
            except IncompatibleValue as exc:
                errors.append(CarrierViolation(f"{what}[{i}][{j}]: {exc}"))
                ok = False
        coerced.append(new_row)
    return FuzzyRelation(lattice, coerced, trusted=True) if ok else None


def _check_components(lattice: Lattice, alphabet: Sequence[str], sigma: RawSet,
                      delta: Mapping[str, RawRelation], tau: RawSet,
                      names: Optional[Sequence[str]], n: Optional[int]):
    errors: List[FuzzyAutomataError] = []
    size = _resolve_size(n, names, delta, tau, sigma)
    if not size or size < 1:
        errors.append(DimensionMismatch("An automaton needs at least one state"))
        return errors, None
    if not alphabet:
        errors.append(DimensionMismatch("The alphabet must not be empty"))
    if len(set(alphabet)) != len(alphabet):
        errors.append(DimensionMismatch("The alphabet contains duplicate symbols"))
    for symbol in alphabet:
        if not _is_plain_token(symbol):
            errors.append(FuzzyAutomataError(f"Symbol {symbol!r} must be a non-empty word "
                                             "without whitespace or '#'"))
        elif symbol in RESERVED_SYMBOLS:
            errors.append(FuzzyAutomataError(f"Symbol {symbol!r} is a reserved keyword"))
    if names is not None:
        if len(names) != size:
            errors.append(DimensionMismatch(f"Got {len(names)} state names for {size} states"))
        elif len(set(names)) != len(names):
            errors.append(DimensionMismatch("State names must be distinct"))
        for name in names:
            if not _is_plain_token(name):
                errors.append(FuzzyAutomataError(f"State name {name!r} must be a non-empty word "
                                                 "without whitespace or '#'"))

    new_sigma = _normalize_set(lattice, sigma, size, "initial", errors)
    new_tau = _normalize_set(lattice, tau, size, "terminal", errors)
    new_delta: Dict[str, FuzzyRelation] = {}
    for symbol in delta:
        if symbol not in alphabet:
            errors.append(UnknownSymbol(symbol, alphabet))
    for symbol in alphabet:
        if symbol not in delta:
            errors.append(DimensionMismatch(f"No transition relation for symbol {symbol!r}"))
            continue
        relation = _normalize_relation(lattice, delta[symbol], size, f"trans {symbol}", errors)
        if relation is not None:
            new_delta[symbol] = relation
    return errors, (size, new_sigma, new_delta, new_tau)


def validate_components(lattice: Lattice, alphabet: Sequence[str], sigma: RawSet,
                        delta: Mapping[str, RawRelation], tau: RawSet,
                        state_names: Optional[Sequence[str]] = None,
                        n: Optional[int] = None) -> List[FuzzyAutomataError]:
    """All invariant violations of the given components, empty when they form an automaton"""
    errors, _ = _check_components(lattice, alphabet, sigma, delta, tau, state_names, n)
    return errors


class FuzzyAutomaton:
    """Fuzzy finite automaton over a residuated lattice"""

    def __init__(self, lattice: Lattice, alphabet: Sequence[str], sigma: RawSet,
                 delta: Mapping[str, RawRelation], tau: RawSet,
                 state_names: Optional[Sequence[str]] = None, n: Optional[int] = None):
        errors, parts = _check_components(lattice, alphabet, sigma, delta, tau, state_names, n)
        if errors:
            raise errors[0]
        self.lattice = lattice
        self.alphabet: Tuple[str, ...] = tuple(alphabet)
        self.n, self.sigma, self.delta, self.tau = parts
        self.state_names: Tuple[str, ...] = (tuple(state_names) if state_names is not None
                                             else default_state_names(self.n))

    def validate(self) -> List[FuzzyAutomataError]:
        return validate_components(self.lattice, self.alphabet, self.sigma, self.delta,
                                   self.tau, self.state_names)

    @property
    def identity(self) -> FuzzyRelation:
        return FuzzyRelation.identity(self.lattice, self.n)

    def transition(self, symbol: str) -> FuzzyRelation:
        if symbol not in self.delta:
            raise UnknownSymbol(symbol, self.alphabet)
        return self.delta[symbol]

    def delta_word(self, word: Sequence[str]) -> FuzzyRelation:
        """δ_u = δ_x1 ∘ ... ∘ δ_xk, Δ for the empty word"""
        from utils.relations import compose_rr

        result = self.identity
        for symbol in check_word(word, self.alphabet):
            result = compose_rr(result, self.delta[symbol])
        return result

    def sigma_u(self, word: Sequence[str]) -> FuzzySet:
        """σ_u = σ ∘ δ_u, one symbol at a time from the left"""
        from utils.relations import compose_sr

        current = self.sigma
        for symbol in check_word(word, self.alphabet):
            current = compose_sr(current, self.delta[symbol])
        return current

    def tau_u(self, word: Sequence[str]) -> FuzzySet:
        """τ_u = δ_u ∘ τ, one symbol at a time from the right"""
        from utils.relations import compose_rs

        current = self.tau
        for symbol in reversed(check_word(word, self.alphabet)):
            current = compose_rs(self.delta[symbol], current)
        return current

    def language_degree(self, word: Sequence[str]) -> TruthValue:
        """Degree to which the word belongs to the recognized fuzzy language"""
        from utils.relations import dot

        return dot(self.sigma_u(word), self.tau)

    def reverse(self) -> FuzzyAutomaton:
        """σ and τ swapped, every δ_x transposed"""
        return FuzzyAutomaton(self.lattice, self.alphabet, self.tau,
                              {x: self.delta[x].transpose() for x in self.alphabet},
                              self.sigma, self.state_names)

    def afterset_automaton(self, phi: FuzzyRelation) -> FuzzyAutomaton:
        """Automaton on the distinct φ-aftersets, with δ_x = φ∘δ_x∘φ, σ∘φ and φ∘τ"""
        from utils.relations import compose_rr, compose_rs, compose_sr, distinct_rows, is_quasi_order

        if phi.lattice != self.lattice:
            raise KindMismatch(f"Relation over {phi.lattice.name}, automaton over {self.lattice.name}")
        if (phi.rows, phi.cols) != (self.n, self.n):
            raise DimensionMismatch(f"Expected a {self.n}x{self.n} relation")
        if not is_quasi_order(phi):
            raise NotQuasiOrder("Afterset automata need a reflexive and transitive relation")

        reps = distinct_rows(phi).representatives
        sigma = compose_sr(self.sigma, phi)
        tau = compose_rs(phi, self.tau)
        delta = {x: compose_rr(compose_rr(phi, self.delta[x]), phi).restrict(reps)
                 for x in self.alphabet}
        return FuzzyAutomaton(self.lattice, self.alphabet,
                              FuzzySet(self.lattice, [sigma[i] for i in reps], trusted=True),
                              delta,
                              FuzzySet(self.lattice, [tau[i] for i in reps], trusted=True),
                              [self.state_names[i] for i in reps])

    def __eq__(self, other) -> bool:
        if not isinstance(other, FuzzyAutomaton):
            return NotImplemented
        return (self.lattice == other.lattice and self.alphabet == other.alphabet
                and self.sigma == other.sigma and self.tau == other.tau
                and self.delta == other.delta and self.state_names == other.state_names)

    def __repr__(self):
        return (f"FuzzyAutomaton({self.lattice.name}, states={self.n}, "
                f"alphabet={list(self.alphabet)})")
