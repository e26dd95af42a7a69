"""
Phi determinization - the automaton A_φ read off the transition tree of the vectors φ_u
"""
import logging
from typing import Optional

from models.automaton import FuzzyAutomaton
from models.budget import Budget, DEFAULT_MAX_STATES
from models.det_method import DetMethod, DetResult, RelationSource
from models.errors import FuzzyAutomataError
from models.fuzzy import FuzzyRelation
from utils.invariants import require_weakly_right_invariant
from utils.transition_tree import forward_label, phi_tree

logger = logging.getLogger(__name__)


class PhiDeterminization(DetMethod):
    """A_φ for φ = Δ (the Nerode automaton), the greatest ri/wri quasi-order or a custom relation"""

    _NAMES = {
        RelationSource.IDENTITY: "nerode",
        RelationSource.RI: "ri",
        RelationSource.WRI: "wri",
        RelationSource.CUSTOM: "phi",
    }

    def __init__(self, source: RelationSource = RelationSource.IDENTITY,
                 relation: Optional[FuzzyRelation] = None):
        if source not in self._NAMES:
            raise FuzzyAutomataError(f"A_φ cannot be built from a {source.value} relation")
        super().__init__(source, relation)

    @property
    def name(self) -> str:
        return self._NAMES[self.source]

    def run(self, a: FuzzyAutomaton, budget: Optional[Budget] = None,
            validate: bool = True) -> DetResult:
        budget = budget or Budget.default()
        phi = self.resolve_relation(a, budget)
        custom = self.source is RelationSource.CUSTOM
        if custom and validate:
            require_weakly_right_invariant(a, phi, budget)

        tree = phi_tree(a, phi, budget.max_states)
        prefix = "σ" if self.source is RelationSource.IDENTITY else "φ"
        cdfa = tree.to_cdfa(forward_label(prefix))
        logger.info("%s: %d states, %d closure checks", self.name, cdfa.size, tree.closure_checks)
        return DetResult(cdfa, tree.states_created, tree.closure_checks, self,
                         verified=validate or not custom)


def determinize_phi(a: FuzzyAutomaton, phi: FuzzyRelation,
                    max_states: int = DEFAULT_MAX_STATES, validate: bool = True,
                    budget: Optional[Budget] = None) -> DetResult:
    """A_φ for a reflexive weakly right invariant relation φ"""
    budget = budget or Budget()
    budget = Budget(budget.max_iterations, budget.max_family, max_states)
    return PhiDeterminization(RelationSource.CUSTOM, phi).run(a, budget, validate)


def nerode(a: FuzzyAutomaton, max_states: int = DEFAULT_MAX_STATES) -> DetResult:
    """Nerode automaton: states σ_u = σ∘δ_u"""
    return PhiDeterminization(RelationSource.IDENTITY).run(a, Budget(max_states=max_states))
