"""
Psi determinization - the automaton A^ψ of the vectors ψ^u, recognizing the reverse language
"""
import logging
from typing import Optional

from models.automaton import FuzzyAutomaton
from models.budget import Budget, DEFAULT_MAX_STATES
from models.det_method import DetMethod, DetResult, RelationSource
from models.errors import FuzzyAutomataError
from models.fuzzy import FuzzyRelation
from utils.invariants import require_weakly_left_invariant
from utils.transition_tree import backward_label, forward_label, psi_tree

logger = logging.getLogger(__name__)


class PsiDeterminization(DetMethod):
    """A^ψ for ψ = Δ (the reverse Nerode automaton), the greatest li/wli quasi-order or a custom relation"""

    _NAMES = {
        RelationSource.IDENTITY: "reverse-nerode",
        RelationSource.LI: "li",
        RelationSource.WLI: "wli",
        RelationSource.CUSTOM: "psi",
    }

    def __init__(self, source: RelationSource = RelationSource.IDENTITY,
                 relation: Optional[FuzzyRelation] = None):
        if source not in self._NAMES:
            raise FuzzyAutomataError(f"A^ψ cannot be built from a {source.value} relation")
        super().__init__(source, relation)

    @property
    def name(self) -> str:
        return self._NAMES[self.source]

    @property
    def reverses_language(self) -> bool:
        return True

    def run(self, a: FuzzyAutomaton, budget: Optional[Budget] = None,
            validate: bool = True) -> DetResult:
        budget = budget or Budget.default()
        psi = self.resolve_relation(a, budget)
        custom = self.source is RelationSource.CUSTOM
        if custom and validate:
            require_weakly_left_invariant(a, psi, budget)

        tree = psi_tree(a, psi, budget.max_states)
        if self.source is RelationSource.IDENTITY:
            label = forward_label("τ")
        else:
            label = backward_label("ψ")
        cdfa = tree.to_cdfa(label)
        logger.info("%s: %d states, %d closure checks", self.name, cdfa.size, tree.closure_checks)
        return DetResult(cdfa, tree.states_created, tree.closure_checks, self,
                         verified=validate or not custom)


def determinize_psi(a: FuzzyAutomaton, psi: FuzzyRelation,
                    max_states: int = DEFAULT_MAX_STATES, validate: bool = True,
                    budget: Optional[Budget] = None) -> DetResult:
    """A^ψ for a reflexive weakly left invariant relation ψ"""
    budget = budget or Budget()
    budget = Budget(budget.max_iterations, budget.max_family, max_states)
    return PsiDeterminization(RelationSource.CUSTOM, psi).run(a, budget, validate)


def reverse_nerode(a: FuzzyAutomaton, max_states: int = DEFAULT_MAX_STATES) -> DetResult:
    """Reverse Nerode automaton: states τ_u = δ_u∘τ"""
    return PsiDeterminization(RelationSource.IDENTITY).run(a, Budget(max_states=max_states))
