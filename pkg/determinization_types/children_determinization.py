"""
Children determinization - glues the states of A_φ that have the same children and terminal degree
"""
import logging
from typing import Dict, List, Optional, Tuple

from models.automaton import FuzzyAutomaton
from models.budget import Budget, DEFAULT_MAX_STATES
from models.cdfa import Cdfa
from models.det_method import DetMethod, DetResult, RelationSource
from models.errors import FuzzyAutomataError
from models.fuzzy import FuzzyRelation
from utils.invariants import require_weakly_right_invariant
from utils.transition_tree import TransitionTree, forward_label, phi_tree

logger = logging.getLogger(__name__)


def glue_children(tree: TransitionTree, label_prefix: str) -> Tuple[Cdfa, int]:
    """Children automaton of a closed φ-tree, plus the number of tuple comparisons"""
    label = forward_label(label_prefix)
    index: Dict[Tuple, int] = {}
    representatives: List[int] = []
    state_of: List[int] = []
    checks = 0
    for state in range(tree.size):
        # children pointers identify the child vectors, so pointer equality is vector equality
        key = (tuple(tree.transitions[state]), tree.terms[state])
        checks += 1
        if key not in index:
            index[key] = len(representatives)
            representatives.append(state)
        state_of.append(index[key])

    transitions = [[state_of[target] for target in tree.transitions[rep]]
                   for rep in representatives]
    provenance = [tuple(tree.vectors[target] for target in tree.transitions[rep])
                  for rep in representatives]
    cdfa = Cdfa(tree.vectors[0].lattice, tree.alphabet,
                [f"c:{label(tree.words[rep])}" for rep in representatives],
                transitions, state_of[0], [tree.terms[rep] for rep in representatives],
                provenance)
    return cdfa, checks


class ChildrenDeterminization(DetMethod):
    """Children automaton of A_φ for φ = Δ, the greatest ri/wri quasi-order or a custom relation"""

    _NAMES = {
        RelationSource.IDENTITY: "children-nerode",
        RelationSource.RI: "children-ri",
        RelationSource.WRI: "children-wri",
        RelationSource.CUSTOM: "children",
    }

    def __init__(self, source: RelationSource = RelationSource.IDENTITY,
                 relation: Optional[FuzzyRelation] = None):
        if source not in self._NAMES:
            raise FuzzyAutomataError(f"Children automata cannot start from a {source.value} relation")
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
        cdfa, checks = glue_children(tree, prefix)
        logger.info("%s: %d states from a %d-state tree", self.name, cdfa.size, tree.size)
        return DetResult(cdfa, tree.states_created, tree.closure_checks + checks, self,
                         verified=validate or not custom)


def children(a: FuzzyAutomaton, phi: FuzzyRelation, max_states: int = DEFAULT_MAX_STATES,
             validate: bool = True, budget: Optional[Budget] = None) -> DetResult:
    """Children automaton A_φ^c for a reflexive weakly right invariant relation φ"""
    budget = budget or Budget()
    budget = Budget(budget.max_iterations, budget.max_family, max_states)
    return ChildrenDeterminization(RelationSource.CUSTOM, phi).run(a, budget, validate)
