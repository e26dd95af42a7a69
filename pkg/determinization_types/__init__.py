"""
Determinization types package
"""
from .phi_determinization import PhiDeterminization, determinize_phi, nerode
from .psi_determinization import PsiDeterminization, determinize_psi, reverse_nerode
from .children_determinization import ChildrenDeterminization, children
from .brzozowski_determinization import BrzozowskiDeterminization, brzozowski

__all__ = ['PhiDeterminization', 'PsiDeterminization', 'ChildrenDeterminization',
           'BrzozowskiDeterminization', 'determinize_phi', 'nerode', 'determinize_psi',
           'reverse_nerode', 'children', 'brzozowski']
