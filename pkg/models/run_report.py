"""
Run report model - one line of the compare table
"""
from typing import Dict, List, Optional

import pandas as pd

from .det_method import DetResult


class RunReport:
    """Sizes, counters and the equivalence verdict of one method run"""

    def __init__(self, method: str, input_states: int, output_states: Optional[int] = None,
                 states_created: Optional[int] = None, closure_checks: Optional[int] = None,
                 budget_hit: bool = False, wall_time: float = 0.0,
                 equivalent: Optional[bool] = None, max_length: Optional[int] = None,
                 witness: Optional[str] = None):
        self.method = method
        self.input_states = input_states
        self.output_states = output_states
        self.states_created = states_created
        self.closure_checks = closure_checks
        self.budget_hit = budget_hit
        self.wall_time = wall_time
        self.equivalent = equivalent
        self.max_length = max_length
        self.witness = witness

    @staticmethod
    def from_result(result: DetResult, input_states: int, wall_time: float) -> 'RunReport':
        return RunReport(result.method.name, input_states, result.size, result.states_created,
                         result.closure_checks, result.budget_hit, wall_time)

    @property
    def verdict(self) -> str:
        if self.budget_hit:
            return "budget exceeded"
        if self.equivalent is None:
            return "not checked"
        if self.equivalent:
            return f"equivalent ≤ {self.max_length}"
        return f"NOT equivalent (witness: {self.witness})"

    def to_row(self) -> Dict[str, object]:
        return {
            'method': self.method,
            'input states': self.input_states,
            'states': self.output_states if self.output_states is not None else "-",
            'tree vertices': self.states_created if self.states_created is not None else "-",
            'closure checks': self.closure_checks if self.closure_checks is not None else "-",
            'time (s)': f"{self.wall_time:.3f}",
            'verdict': self.verdict,
        }

    def to_dict(self) -> Dict[str, object]:
        return {
            'method': self.method,
            'input_states': self.input_states,
            'output_states': self.output_states,
            'states_created': self.states_created,
            'closure_checks': self.closure_checks,
            'budget_hit': self.budget_hit,
            'wall_time': self.wall_time,
            'equivalent': self.equivalent,
            'max_length': self.max_length,
            'witness': self.witness,
        }

    def __repr__(self):
        return f"RunReport({self.method}, states={self.output_states}, {self.verdict})"


def reports_frame(reports: List[RunReport]) -> pd.DataFrame:
    """Compare table sorted by method name, numbered from 1"""
    ordered = sorted(reports, key=lambda r: r.method)
    df = pd.DataFrame([r.to_row() for r in ordered])
    df.index = df.index + 1
    return df
