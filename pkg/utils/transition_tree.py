"""
Transition trees - breadth-first construction of the vectors φ_u / ψ^u and their gluing into a CDFA
"""
import logging
from collections import deque
from typing import Callable, Dict, List, Sequence

from models.automaton import FuzzyAutomaton
from models.cdfa import Cdfa
from models.errors import BudgetExceeded
from models.fuzzy import FuzzyRelation, FuzzySet
from models.word import Word, format_word
from utils.relations import compose_rr, compose_rs, compose_sr, dot

logger = logging.getLogger(__name__)


class TransitionTree:
    """Closed transition tree: one entry per distinct vector, in discovery order"""

    def __init__(self, alphabet: Sequence[str]):
        self.alphabet = tuple(alphabet)
        self.vectors: List[FuzzySet] = []
        self.words: List[Word] = []
        self.transitions: List[List[int]] = []
        self.terms = []
        self.states_created = 0
        self.closure_checks = 0

    @property
    def size(self) -> int:
        return len(self.vectors)

    def to_cdfa(self, label: Callable[[Word], str]) -> Cdfa:
        lattice = self.vectors[0].lattice
        return Cdfa(lattice, self.alphabet, [label(word) for word in self.words],
                    self.transitions, 0, self.terms, self.vectors)


def grow_tree(alphabet: Sequence[str], root: FuzzySet,
              step: Callable[[FuzzySet, str], FuzzySet],
              term: Callable[[FuzzySet], object],
              extend: Callable[[Word, str], Word],
              max_states: int) -> TransitionTree:
    """Breadth-first tree over open leaves, symbols in alphabet order.

    A child whose vector was seen before becomes a closed leaf pointing at
    the earlier vertex; every new vector becomes an internal vertex and a
    state. Raises BudgetExceeded when more than max_states distinct vectors
    appear.
    """
    tree = TransitionTree(alphabet)
    index: Dict[FuzzySet, int] = {}

    def add(vector: FuzzySet, word: Word) -> int:
        if len(tree.vectors) >= max_states:
            raise BudgetExceeded("max_states", max_states, reached=tree.states_created,
                                 message=f"More than {max_states} distinct states "
                                         f"(after {tree.states_created} tree vertices)")
        state = len(tree.vectors)
        index[vector] = state
        tree.vectors.append(vector)
        tree.words.append(word)
        tree.terms.append(term(vector))
        logger.debug("state %d for word %s: %s", state, format_word(word), vector.format())
        return state

    tree.states_created = 1
    add(root, ())
    queue = deque([0])
    while queue:
        state = queue.popleft()
        row = []
        for symbol in tree.alphabet:
            child = step(tree.vectors[state], symbol)
            tree.states_created += 1
            tree.closure_checks += 1
            target = index.get(child)
            if target is None:
                target = add(child, extend(tree.words[state], symbol))
                queue.append(target)
            row.append(target)
        tree.transitions.append(row)
    return tree


def phi_tree(a: FuzzyAutomaton, phi: FuzzyRelation, max_states: int) -> TransitionTree:
    """Tree of φ_ε = σ∘φ, φ_ux = φ_u∘δ_x∘φ with terminal degrees φ_u∘τ"""
    moves = {x: compose_rr(a.delta[x], phi) for x in a.alphabet}
    return grow_tree(a.alphabet, compose_sr(a.sigma, phi),
                     lambda vector, x: compose_sr(vector, moves[x]),
                     lambda vector: dot(vector, a.tau),
                     lambda word, x: word + (x,),
                     max_states)


def psi_tree(a: FuzzyAutomaton, psi: FuzzyRelation, max_states: int) -> TransitionTree:
    """Tree of ψ^ε = ψ∘τ, ψ^xu = ψ∘δ_x∘ψ^u with terminal degrees σ∘ψ^u"""
    moves = {x: compose_rr(psi, a.delta[x]) for x in a.alphabet}
    return grow_tree(a.alphabet, compose_rs(psi, a.tau),
                     lambda vector, x: compose_rs(moves[x], vector),
                     lambda vector: dot(a.sigma, vector),
                     lambda word, x: (x,) + word,
                     max_states)


def forward_label(prefix: str) -> Callable[[Word], str]:
    return lambda word: f"{prefix}_{format_word(word)}"


def backward_label(prefix: str) -> Callable[[Word], str]:
    return lambda word: f"{prefix}^{format_word(word)}"
