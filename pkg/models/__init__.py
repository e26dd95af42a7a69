"""
Models package
"""
# Import in order to avoid circular dependencies
from .errors import (FuzzyAutomataError, IncompatibleValue, CarrierViolation, DimensionMismatch,
                     KindMismatch, UnknownSymbol, NotQuasiOrder, PreconditionFailed,
                     BudgetExceeded, FormatError, FzaSyntaxError, SemanticError, DuplicateSection)
from .lattice import Lattice, LatticeTag, TruthValue
from .fuzzy import FuzzySet, FuzzyRelation
from .word import Word, EMPTY_WORD
from .budget import Budget
from .automaton import FuzzyAutomaton, validate_components
from .cdfa import Cdfa, cdfa_homomorphism, cdfa_isomorphic
from .quasi_order import InvarianceClass, QuasiOrderReport
from .det_method import DetMethod, DetResult, RelationSource
from .run_report import RunReport

__all__ = ['FuzzyAutomataError', 'IncompatibleValue', 'CarrierViolation', 'DimensionMismatch',
           'KindMismatch', 'UnknownSymbol', 'NotQuasiOrder', 'PreconditionFailed',
           'BudgetExceeded', 'FormatError', 'FzaSyntaxError', 'SemanticError', 'DuplicateSection',
           'Lattice', 'LatticeTag', 'TruthValue', 'FuzzySet', 'FuzzyRelation', 'Word',
           'EMPTY_WORD', 'Budget', 'FuzzyAutomaton', 'validate_components', 'Cdfa',
           'cdfa_homomorphism', 'cdfa_isomorphic', 'InvarianceClass', 'QuasiOrderReport',
           'DetMethod', 'DetResult', 'RelationSource', 'RunReport']
