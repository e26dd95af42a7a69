"""
Budget model - limits that keep fixpoint iterations and tree constructions finite
"""
from .errors import FuzzyAutomataError

DEFAULT_MAX_ITERATIONS = 10_000
DEFAULT_MAX_FAMILY = 100_000
DEFAULT_MAX_STATES = 10_000


class Budget:
    """Caps for fixpoint iterations, σ_u/τ_u families and constructed states"""

    def __init__(self, max_iterations: int = DEFAULT_MAX_ITERATIONS,
                 max_family: int = DEFAULT_MAX_FAMILY,
                 max_states: int = DEFAULT_MAX_STATES):
        for name, value in (("max_iterations", max_iterations), ("max_family", max_family),
                            ("max_states", max_states)):
            if not isinstance(value, int) or value < 1:
                raise FuzzyAutomataError(f"{name} must be a positive integer, got {value!r}")
        self.max_iterations = max_iterations
        self.max_family = max_family
        self.max_states = max_states

    @staticmethod
    def default() -> 'Budget':
        return Budget()

    def __repr__(self):
        return (f"Budget(max_iterations={self.max_iterations}, max_family={self.max_family}, "
                f"max_states={self.max_states})")
