"""Flow state, augmentation traces and solver results"""

from fractions import Fraction
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from .modes import OracleKind, SolveStatus
from .paths import RPath
from .rational import Rational


class FlowState(BaseModel):
    """Exact rational vector over the ground set"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    values: Tuple[Rational, ...]

    @classmethod
    def zero(cls, ground_size: int) -> "FlowState":
        return cls(values=(Fraction(0),) * ground_size)

    def __getitem__(self, index: int) -> Fraction:
        return self.values[index]

    def __len__(self) -> int:
        return len(self.values)

    def augmented(self, path: RPath, epsilon: Fraction) -> "FlowState":
        values = list(self.values)
        for index, sign in path.support:
            values[index] += sign * epsilon
        return FlowState(values=tuple(values))

    def is_integral(self) -> bool:
        return all(value.denominator == 1 for value in self.values)


class TraceStep(BaseModel):
    """One augmentation: the path used, the step size and the objective after it"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    iteration: int
    path: RPath
    epsilon: Rational
    objective_after: Rational
    path_length: int


class AugmentationTrace(BaseModel):
    """Ordered audit log of a solver run"""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    ground_size: int
    r: int
    steps: List[TraceStep] = Field(default_factory=list)

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def lengths(self) -> List[int]:
        return [step.path_length for step in self.steps]

    @property
    def objectives(self) -> List[Fraction]:
        return [step.objective_after for step in self.steps]


class MaxFlowResult(BaseModel):
    """Final flow and trace of a Ford-Fulkerson run"""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    status: SolveStatus
    oracle: OracleKind
    flow: FlowState
    trace: AugmentationTrace
    unbounded_path: Optional[RPath] = Field(
        None, description="r-path with support {r} that certified unboundedness"
    )

    @property
    def objective(self) -> Optional[Fraction]:
        if self.status == SolveStatus.UNBOUNDED:
            return None
        return self.flow[self.trace.r]


class TraceSummary(BaseModel):
    """Augmentation counts measured against the quadratic bounds"""

    augmentations: int
    squared_ground_bound: int
    vertex_arc_bound: Optional[int] = None
    nonconformal_augmentations: int
    longest_conformal_run: int
    length_levels: List[int]
    lengths_nondecreasing: bool
    within_bounds: bool


class IterationComparison(BaseModel):
    """Lengths reported by two oracles on the same flow"""

    iteration: int
    generic_length: Optional[int]
    specialized_length: Optional[int]

    @property
    def agree(self) -> bool:
        return self.generic_length == self.specialized_length


class OracleComparison(BaseModel):
    """Lockstep comparison of the generic oracle with a specialized one"""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    specialized: OracleKind
    iterations: List[IterationComparison]
    generic_objective: Optional[Rational]
    specialized_objective: Optional[Rational]

    @property
    def agree(self) -> bool:
        return (
            all(item.agree for item in self.iterations)
            and self.generic_objective == self.specialized_objective
        )
