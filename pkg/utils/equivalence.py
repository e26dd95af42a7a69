"""
Equivalence checks - compare a CDFA with the fuzzy language of an automaton on all short words
"""
from typing import Dict, Optional

from models.automaton import FuzzyAutomaton
from models.cdfa import Cdfa
from models.lattice import TruthValue
from models.word import Word, reverse_word, words_up_to
from utils.relations import compose_sr, dot


def language_table(a: FuzzyAutomaton, max_length: int) -> Dict[Word, TruthValue]:
    """Degrees of all words of length <= max_length, sharing σ_u between prefixes"""
    vectors = {(): a.sigma}
    table = {(): dot(a.sigma, a.tau)}
    for word in words_up_to(a.alphabet, max_length):
        if not word:
            continue
        vector = compose_sr(vectors[word[:-1]], a.delta[word[-1]])
        vectors[word] = vector
        table[word] = dot(vector, a.tau)
    return table


def first_disagreement(a: FuzzyAutomaton, c: Cdfa, max_length: int,
                       reverse: bool = False) -> Optional[Word]:
    """Shortest word (military order) on which c and a differ, None if they agree.

    With reverse=True the CDFA is compared with the reverse language of a.
    """
    table = language_table(a, max_length)
    for word in words_up_to(a.alphabet, max_length):
        expected = table[reverse_word(word) if reverse else word]
        if c.evaluate(word) != expected:
            return word
    return None


def equivalent_up_to(a: FuzzyAutomaton, c: Cdfa, max_length: int, reverse: bool = False) -> bool:
    return first_disagreement(a, c, max_length, reverse) is None
