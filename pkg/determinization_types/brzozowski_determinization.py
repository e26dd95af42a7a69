"""
Brzozowski determinization - reverse Nerode automaton of A^ψ, the minimal equivalent CDFA
"""
import logging
from typing import Optional

from models.automaton import FuzzyAutomaton
from models.budget import Budget, DEFAULT_MAX_STATES
from models.det_method import DetMethod, DetResult, RelationSource
from models.errors import FuzzyAutomataError
from models.word import format_word, reverse_word
from utils.transition_tree import backward_label, psi_tree

logger = logging.getLogger(__name__)

FIRST_STAGES = {
    "reverse_nerode": RelationSource.IDENTITY,
    "psi_li": RelationSource.LI,
    "psi_wli": RelationSource.WLI,
}


class BrzozowskiDeterminization(DetMethod):
    """Two reverse determinizations: A^ψ first (ψ = Δ, li or wli), then its reverse Nerode automaton"""

    _NAMES = {
        RelationSource.IDENTITY: "brzozowski",
        RelationSource.LI: "brzozowski-li",
        RelationSource.WLI: "brzozowski-wli",
    }

    def __init__(self, source: RelationSource = RelationSource.IDENTITY):
        if source not in self._NAMES:
            raise FuzzyAutomataError(f"No Brzozowski first stage for a {source.value} relation")
        super().__init__(source)

    @property
    def name(self) -> str:
        return self._NAMES[self.source]

    def run(self, a: FuzzyAutomaton, budget: Optional[Budget] = None,
            validate: bool = True) -> DetResult:
        budget = budget or Budget.default()
        psi = self.resolve_relation(a, budget)

        first = psi_tree(a, psi, budget.max_states)
        reversed_cdfa = first.to_cdfa(backward_label("ψ"))
        logger.debug("first stage: %d states for the reverse language", reversed_cdfa.size)

        crisp = reversed_cdfa.to_automaton()
        second = psi_tree(crisp, crisp.identity, budget.max_states)
        # second-stage words are read backwards by the final automaton
        cdfa = second.to_cdfa(lambda word: f"m_{format_word(reverse_word(word))}")
        logger.info("%s: %d states (first stage %d)", self.name, cdfa.size, reversed_cdfa.size)
        return DetResult(cdfa, first.states_created + second.states_created,
                         first.closure_checks + second.closure_checks, self)


def brzozowski(a: FuzzyAutomaton, first_stage: str = "reverse_nerode",
               max_states: int = DEFAULT_MAX_STATES,
               budget: Optional[Budget] = None) -> DetResult:
    """Minimal CDFA equivalent to a; first_stage is reverse_nerode, psi_li or psi_wli"""
    if first_stage not in FIRST_STAGES:
        raise FuzzyAutomataError(f"Unknown first stage {first_stage!r}; "
                                 f"choose from {', '.join(FIRST_STAGES)}")
    budget = budget or Budget()
    budget = Budget(budget.max_iterations, budget.max_family, max_states)
    return BrzozowskiDeterminization(FIRST_STAGES[first_stage]).run(a, budget)
