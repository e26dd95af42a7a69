"""
Invariant quasi-orders - greatest right/left and weakly right/left invariant fuzzy quasi-orders and membership checks
"""
import logging
from typing import Callable, List, Optional

from models.automaton import FuzzyAutomaton
from models.budget import Budget
from models.errors import BudgetExceeded, DimensionMismatch, KindMismatch, PreconditionFailed
from models.fuzzy import FuzzyRelation, FuzzySet
from models.quasi_order import InvarianceClass, QuasiOrderReport
from utils.relations import (compose_rr, compose_rs, compose_sr, is_reflexive, is_transitive,
                             leq, meet_all, residual_left_rel, residual_left_set,
                             residual_right_rel, residual_right_set)
from utils.transition_tree import phi_tree, psi_tree

logger = logging.getLogger(__name__)


def _check_shape(a: FuzzyAutomaton, relation: FuzzyRelation):
    if relation.lattice != a.lattice:
        raise KindMismatch(f"Relation over {relation.lattice.name}, "
                           f"automaton over {a.lattice.name}")
    if (relation.rows, relation.cols) != (a.n, a.n):
        raise DimensionMismatch(f"Expected a {a.n}x{a.n} relation, "
                                f"got {relation.rows}x{relation.cols}")


def _fixpoint(seed: FuzzyRelation, refine: Callable[[FuzzyRelation], FuzzyRelation],
              budget: Budget, what: InvarianceClass) -> QuasiOrderReport:
    current = seed
    sequence = [seed]
    while True:
        if len(sequence) > budget.max_iterations:
            raise BudgetExceeded("max_iterations", budget.max_iterations,
                                 reached=len(sequence),
                                 message=f"No {what.value} fixpoint within "
                                         f"{budget.max_iterations} iterations")
        following = current.meet(refine(current))
        if following == current:
            break
        logger.debug("%s iteration %d: %s", what.value, len(sequence) + 1, following.format())
        sequence.append(following)
        current = following
    logger.info("greatest %s quasi-order after %d iterations", what.value, len(sequence))
    return QuasiOrderReport(current, is_reflexive(current), is_transitive(current), what,
                            holds=True, iterations_used=len(sequence), sequence=tuple(sequence))


def greatest_right_invariant(a: FuzzyAutomaton, budget: Optional[Budget] = None) -> QuasiOrderReport:
    """φ_1 = τ/τ, φ_k+1 = φ_k ∧ ⋀_x (δ_x∘φ_k)/(δ_x∘φ_k) until stable"""
    budget = budget or Budget.default()

    def refine(phi: FuzzyRelation) -> FuzzyRelation:
        moved = [compose_rr(a.delta[x], phi) for x in a.alphabet]
        return meet_all([residual_left_rel(m, m) for m in moved])

    return _fixpoint(residual_left_set(a.tau, a.tau), refine, budget, InvarianceClass.RI)


def greatest_left_invariant(a: FuzzyAutomaton, budget: Optional[Budget] = None) -> QuasiOrderReport:
    """ψ_1 = σ\\σ, ψ_k+1 = ψ_k ∧ ⋀_x (ψ_k∘δ_x)\\(ψ_k∘δ_x) until stable"""
    budget = budget or Budget.default()

    def refine(psi: FuzzyRelation) -> FuzzyRelation:
        moved = [compose_rr(psi, a.delta[x]) for x in a.alphabet]
        return meet_all([residual_right_rel(m, m) for m in moved])

    return _fixpoint(residual_right_set(a.sigma, a.sigma), refine, budget, InvarianceClass.LI)


def tau_family(a: FuzzyAutomaton, budget: Optional[Budget] = None) -> List[FuzzySet]:
    """Distinct members of {τ_u | u ∈ X*}, in breadth-first order"""
    budget = budget or Budget.default()
    try:
        return psi_tree(a, a.identity, budget.max_family).vectors
    except BudgetExceeded as exc:
        raise BudgetExceeded("max_family", budget.max_family, reached=exc.reached,
                             message=f"More than {budget.max_family} distinct vectors τ_u")


def sigma_family(a: FuzzyAutomaton, budget: Optional[Budget] = None) -> List[FuzzySet]:
    """Distinct members of {σ_u | u ∈ X*}, in breadth-first order"""
    budget = budget or Budget.default()
    try:
        return phi_tree(a, a.identity, budget.max_family).vectors
    except BudgetExceeded as exc:
        raise BudgetExceeded("max_family", budget.max_family, reached=exc.reached,
                             message=f"More than {budget.max_family} distinct vectors σ_u")


def _weak_report(relation: FuzzyRelation, what: InvarianceClass, family_size: int):
    logger.info("greatest %s quasi-order from a family of %d vectors", what.value, family_size)
    return QuasiOrderReport(relation, is_reflexive(relation), is_transitive(relation), what,
                            holds=True, family_size=family_size)


def greatest_weakly_right_invariant(a: FuzzyAutomaton,
                                    budget: Optional[Budget] = None) -> QuasiOrderReport:
    """⋀_u τ_u/τ_u over the finite family of τ_u"""
    family = tau_family(a, budget)
    relation = meet_all([residual_left_set(t, t) for t in family])
    return _weak_report(relation, InvarianceClass.WRI, len(family))


def greatest_weakly_left_invariant(a: FuzzyAutomaton,
                                   budget: Optional[Budget] = None) -> QuasiOrderReport:
    """⋀_u σ_u\\σ_u over the finite family of σ_u"""
    family = sigma_family(a, budget)
    relation = meet_all([residual_right_set(s, s) for s in family])
    return _weak_report(relation, InvarianceClass.WLI, len(family))


def check_right_invariant(a: FuzzyAutomaton, phi: FuzzyRelation) -> bool:
    """φ∘δ_x ≤ δ_x∘φ for every x, and φ∘τ ≤ τ"""
    _check_shape(a, phi)
    return (all(leq(compose_rr(phi, a.delta[x]), compose_rr(a.delta[x], phi))
                for x in a.alphabet)
            and leq(compose_rs(phi, a.tau), a.tau))


def check_left_invariant(a: FuzzyAutomaton, psi: FuzzyRelation) -> bool:
    """δ_x∘ψ ≤ ψ∘δ_x for every x, and σ∘ψ ≤ σ"""
    _check_shape(a, psi)
    return (all(leq(compose_rr(a.delta[x], psi), compose_rr(psi, a.delta[x]))
                for x in a.alphabet)
            and leq(compose_sr(a.sigma, psi), a.sigma))


def check_weakly_right_invariant(a: FuzzyAutomaton, phi: FuzzyRelation,
                                 budget: Optional[Budget] = None) -> bool:
    """Reflexive and φ∘τ_u ≤ τ_u for every word u"""
    _check_shape(a, phi)
    if not is_reflexive(phi):
        return False
    return all(leq(compose_rs(phi, t), t) for t in tau_family(a, budget))


def check_weakly_left_invariant(a: FuzzyAutomaton, psi: FuzzyRelation,
                                budget: Optional[Budget] = None) -> bool:
    """Reflexive and σ_u∘ψ ≤ σ_u for every word u"""
    _check_shape(a, psi)
    if not is_reflexive(psi):
        return False
    return all(leq(compose_sr(s, psi), s) for s in sigma_family(a, budget))


def check_invariant(a: FuzzyAutomaton, relation: FuzzyRelation, kind: InvarianceClass,
                    budget: Optional[Budget] = None) -> QuasiOrderReport:
    """Membership report of an arbitrary relation for one invariance class"""
    if kind is InvarianceClass.RI:
        holds = check_right_invariant(a, relation)
    elif kind is InvarianceClass.LI:
        holds = check_left_invariant(a, relation)
    elif kind is InvarianceClass.WRI:
        holds = check_weakly_right_invariant(a, relation, budget)
    else:
        holds = check_weakly_left_invariant(a, relation, budget)
    return QuasiOrderReport(relation, is_reflexive(relation), is_transitive(relation), kind, holds)


def greatest_invariant(a: FuzzyAutomaton, kind: InvarianceClass,
                       budget: Optional[Budget] = None) -> QuasiOrderReport:
    """Dispatch to the greatest-invariant construction of the given class"""
    constructions = {
        InvarianceClass.RI: greatest_right_invariant,
        InvarianceClass.LI: greatest_left_invariant,
        InvarianceClass.WRI: greatest_weakly_right_invariant,
        InvarianceClass.WLI: greatest_weakly_left_invariant,
    }
    return constructions[kind](a, budget)


def require_weakly_right_invariant(a: FuzzyAutomaton, phi: FuzzyRelation,
                                   budget: Optional[Budget] = None):
    """Raise PreconditionFailed unless φ may drive the A_φ construction"""
    if not check_weakly_right_invariant(a, phi, budget):
        raise PreconditionFailed("The relation must be reflexive and weakly right invariant")


def require_weakly_left_invariant(a: FuzzyAutomaton, psi: FuzzyRelation,
                                  budget: Optional[Budget] = None):
    """Raise PreconditionFailed unless ψ may drive the A^ψ construction"""
    if not check_weakly_left_invariant(a, psi, budget):
        raise PreconditionFailed("The relation must be reflexive and weakly left invariant")
