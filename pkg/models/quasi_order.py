"""
Quasi-order report model - a relation together with its verified properties
"""
from enum import Enum
from typing import Optional, Tuple

from .fuzzy import FuzzyRelation


class InvarianceClass(Enum):
    """Invariance property a quasi-order was computed or checked for"""
    RI = "ri"
    LI = "li"
    WRI = "wri"
    WLI = "wli"


class QuasiOrderReport:
    """Result of a greatest-invariant construction"""

    def __init__(self, relation: FuzzyRelation, reflexive: bool, transitive: bool,
                 class_checked: InvarianceClass, holds: bool,
                 iterations_used: Optional[int] = None, family_size: Optional[int] = None,
                 sequence: Tuple[FuzzyRelation, ...] = ()):
        self.relation = relation
        self.reflexive = reflexive
        self.transitive = transitive
        self.class_checked = class_checked
        self.holds = holds
        self.iterations_used = iterations_used
        self.family_size = family_size
        # φ_1, φ_2, ... of the fixpoint iteration (empty for the weak classes)
        self.sequence = sequence

    @property
    def is_quasi_order(self) -> bool:
        return self.reflexive and self.transitive

    def __repr__(self):
        return (f"QuasiOrderReport({self.class_checked.value}, holds={self.holds}, "
                f"reflexive={self.reflexive}, transitive={self.transitive})")
