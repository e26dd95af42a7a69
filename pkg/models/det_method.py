"""
Determinization method base class - abstract base for the different determinization constructions
"""
from __future__ import annotations

from abc import ABC, abstractmethod
from enum import Enum
from typing import List, Optional

from .automaton import FuzzyAutomaton
from .budget import Budget
from .cdfa import Cdfa
from .errors import FuzzyAutomataError
from .fuzzy import FuzzyRelation


class RelationSource(Enum):
    """Where the quasi-order driving a construction comes from"""
    IDENTITY = "identity"
    RI = "ri"
    LI = "li"
    WRI = "wri"
    WLI = "wli"
    CUSTOM = "custom"


class DetResult:
    """A constructed CDFA with the counters of its transition tree"""

    def __init__(self, cdfa: Cdfa, states_created: int, closure_checks: int,
                 method: DetMethod, budget_hit: bool = False, verified: bool = True):
        self.cdfa = cdfa
        self.states_created = states_created
        self.closure_checks = closure_checks
        self.method = method
        self.budget_hit = budget_hit
        # False when the precondition check on the relation was bypassed
        self.verified = verified

    @property
    def size(self) -> int:
        return self.cdfa.size

    def __repr__(self):
        return (f"DetResult({self.method.name}, states={self.size}, "
                f"created={self.states_created}, checks={self.closure_checks})")


class DetMethod(ABC):
    """Base class for all determinization methods"""

    # Command-line names, in the order they are listed in help texts
    NAMES: List[str] = [
        "nerode", "ri", "wri", "phi",
        "children-nerode", "children-ri", "children-wri", "children",
        "reverse-nerode", "li", "wli", "psi",
        "brzozowski", "brzozowski-li", "brzozowski-wli",
    ]

    def __init__(self, source: RelationSource = RelationSource.IDENTITY,
                 relation: Optional[FuzzyRelation] = None):
        if source is RelationSource.CUSTOM and relation is None:
            raise FuzzyAutomataError("A custom relation source needs a relation")
        self.source = source
        self.relation = relation

    @property
    @abstractmethod
    def name(self) -> str:
        """Command-line name of the method"""

    @property
    def reverses_language(self) -> bool:
        """True if the resulting CDFA recognizes the reverse language"""
        return False

    @abstractmethod
    def run(self, a: FuzzyAutomaton, budget: Optional[Budget] = None,
            validate: bool = True) -> DetResult:
        """
        Build the CDFA for an automaton

        Args:
            a: source automaton
            budget: iteration/family/state caps
            validate: check the precondition of custom relations

        Returns:
            DetResult with the CDFA and construction counters
        """
        pass

    def resolve_relation(self, a: FuzzyAutomaton, budget: Budget) -> FuzzyRelation:
        """The quasi-order this method uses on the given automaton"""
        from models.quasi_order import InvarianceClass
        from utils.invariants import greatest_invariant

        if self.source is RelationSource.IDENTITY:
            return a.identity
        if self.source is RelationSource.CUSTOM:
            return self.relation
        return greatest_invariant(a, InvarianceClass(self.source.value), budget).relation

    def __eq__(self, other) -> bool:
        return (isinstance(other, DetMethod) and type(self) is type(other)
                and self.source == other.source and self.relation == other.relation)

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.source))

    def __repr__(self):
        return f"<{type(self).__name__} {self.name}>"

    @staticmethod
    def from_name(name: str, relation: Optional[FuzzyRelation] = None) -> DetMethod:
        """Get method by command-line name - returns appropriate subclass instance"""
        # Import here to avoid circular imports
        from determinization_types.brzozowski_determinization import BrzozowskiDeterminization
        from determinization_types.children_determinization import ChildrenDeterminization
        from determinization_types.phi_determinization import PhiDeterminization
        from determinization_types.psi_determinization import PsiDeterminization

        sources = {
            "nerode": RelationSource.IDENTITY, "reverse-nerode": RelationSource.IDENTITY,
            "ri": RelationSource.RI, "wri": RelationSource.WRI,
            "li": RelationSource.LI, "wli": RelationSource.WLI,
            "phi": RelationSource.CUSTOM, "psi": RelationSource.CUSTOM,
            "children": RelationSource.CUSTOM,
        }
        if name in ("nerode", "ri", "wri", "phi"):
            return PhiDeterminization(sources[name], relation)
        elif name in ("reverse-nerode", "li", "wli", "psi"):
            return PsiDeterminization(sources[name], relation)
        elif name == "children":
            return ChildrenDeterminization(RelationSource.CUSTOM, relation)
        elif name in ("children-nerode", "children-ri", "children-wri"):
            return ChildrenDeterminization(sources[name.split("-", 1)[1]])
        elif name == "brzozowski":
            return BrzozowskiDeterminization(RelationSource.IDENTITY)
        elif name in ("brzozowski-li", "brzozowski-wli"):
            return BrzozowskiDeterminization(sources[name.split("-", 1)[1]])
        raise FuzzyAutomataError(f"Unknown method {name!r}; choose from {', '.join(DetMethod.NAMES)}")
