"""
Lattice types package
"""
from .unit_interval import BooleanLattice, GodelLattice, ProductLattice, LukasiewiczLattice
from .chain import ChainLattice

__all__ = ['BooleanLattice', 'GodelLattice', 'ProductLattice', 'LukasiewiczLattice', 'ChainLattice']
