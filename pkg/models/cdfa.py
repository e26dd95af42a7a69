"""
Crisp-deterministic fuzzy automaton model - one initial state, a total transition function and fuzzy outputs
"""
from __future__ import annotations

from collections import deque
from typing import Dict, List, Optional, Sequence, Tuple, Union

import pandas as pd

from .automaton import FuzzyAutomaton
from .errors import DimensionMismatch, FuzzyAutomataError
from .fuzzy import FuzzyRelation, FuzzySet
from .lattice import Lattice, TruthValue
from .word import check_word

# A state is defined either by one vector or by a tuple of vectors
Provenance = Union[FuzzySet, Tuple[FuzzySet, ...]]


class Cdfa:
    """Crisp-deterministic fuzzy automaton, states numbered 0..size-1"""

    def __init__(self, lattice: Lattice, alphabet: Sequence[str], labels: Sequence[str],
                 transitions: Sequence[Sequence[int]], initial: int,
                 term: Sequence[TruthValue], provenance: Optional[Sequence[Provenance]] = None):
        self.lattice = lattice
        self.alphabet: Tuple[str, ...] = tuple(alphabet)
        self.labels: Tuple[str, ...] = tuple(labels)
        self.transitions: Tuple[Tuple[int, ...], ...] = tuple(tuple(row) for row in transitions)
        self.initial = initial
        self.term: Tuple[TruthValue, ...] = tuple(lattice.coerce(v) for v in term)
        self.provenance: Optional[Tuple[Provenance, ...]] = (
            tuple(provenance) if provenance is not None else None)
        self._symbol_index: Dict[str, int] = {x: k for k, x in enumerate(self.alphabet)}
        self._check()

    def _check(self):
        size = len(self.labels)
        if size == 0:
            raise DimensionMismatch("A CDFA needs at least one state")
        if len(self.transitions) != size or len(self.term) != size:
            raise DimensionMismatch("Labels, transitions and terminal degrees disagree in length")
        if self.provenance is not None and len(self.provenance) != size:
            raise DimensionMismatch("One provenance entry per state is required")
        if not 0 <= self.initial < size:
            raise FuzzyAutomataError(f"Initial state {self.initial} does not exist")
        for state, row in enumerate(self.transitions):
            if len(row) != len(self.alphabet):
                raise DimensionMismatch(f"State {state} lacks transitions for some symbols")
            if any(not 0 <= target < size for target in row):
                raise FuzzyAutomataError(f"State {state} points outside the automaton")
        if len(self.reachable_states()) != size:
            raise FuzzyAutomataError("Every state must be reachable from the initial state")

    @property
    def size(self) -> int:
        return len(self.labels)

    def run(self, word: Sequence[str]) -> int:
        """State reached from the initial state by reading the word"""
        state = self.initial
        for symbol in check_word(word, self.alphabet):
            state = self.transitions[state][self._symbol_index[symbol]]
        return state

    def evaluate(self, word: Sequence[str]) -> TruthValue:
        """Degree of the word: terminal degree of the state reached"""
        return self.term[self.run(word)]

    def reachable_states(self) -> List[int]:
        """States in breadth-first order from the initial state"""
        seen = {self.initial}
        order = [self.initial]
        queue = deque([self.initial])
        while queue:
            state = queue.popleft()
            for target in self.transitions[state]:
                if target not in seen:
                    seen.add(target)
                    order.append(target)
                    queue.append(target)
        return order

    def to_automaton(self) -> FuzzyAutomaton:
        """Same automaton as a fuzzy automaton with crisp transition relations"""
        lat = self.lattice
        delta = {x: FuzzyRelation.from_function(lat, self.size, [row[k] for row in self.transitions])
                 for k, x in enumerate(self.alphabet)}
        return FuzzyAutomaton(lat, self.alphabet, FuzzySet.indicator(lat, self.size, self.initial),
                              delta, FuzzySet(lat, self.term, trusted=True),
                              [f"q{i}" for i in range(self.size)])

    def to_frame(self) -> pd.DataFrame:
        """State table: label, terminal degree and target label per symbol"""
        rows = []
        for state in range(self.size):
            row = {'state': f"q{state}", 'label': self.labels[state],
                   'term': self.lattice.format_value(self.term[state])}
            for k, symbol in enumerate(self.alphabet):
                row[symbol] = f"q{self.transitions[state][k]}"
            rows.append(row)
        return pd.DataFrame(rows).set_index('state')

    def __eq__(self, other) -> bool:
        if not isinstance(other, Cdfa):
            return NotImplemented
        return (self.lattice == other.lattice and self.alphabet == other.alphabet
                and self.labels == other.labels and self.transitions == other.transitions
                and self.initial == other.initial and self.term == other.term
                and self.provenance == other.provenance)

    def __repr__(self):
        return f"Cdfa({self.lattice.name}, states={self.size}, alphabet={list(self.alphabet)})"


def cdfa_homomorphism(c1: Cdfa, c2: Cdfa) -> Optional[Tuple[int, ...]]:
    """The root-, transition- and output-preserving map from c1 onto c2, or None"""
    if c1.lattice != c2.lattice or c1.alphabet != c2.alphabet:
        return None
    image: Dict[int, int] = {c1.initial: c2.initial}
    queue = deque([c1.initial])
    while queue:
        p = queue.popleft()
        q = image[p]
        if c1.term[p] != c2.term[q]:
            return None
        for p_next, q_next in zip(c1.transitions[p], c2.transitions[q]):
            if p_next in image:
                if image[p_next] != q_next:
                    return None
            else:
                image[p_next] = q_next
                queue.append(p_next)
    return tuple(image[p] for p in range(c1.size))


def cdfa_isomorphic(c1: Cdfa, c2: Cdfa) -> bool:
    """True iff a root-preserving, transition- and output-preserving bijection exists"""
    # Both are accessible, so the homomorphism is onto; equal sizes make it a bijection
    return c1.size == c2.size and cdfa_homomorphism(c1, c2) is not None
