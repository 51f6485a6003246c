"""Max-flow instances over regular spaces"""

from fractions import Fraction
from typing import Dict, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..services.regular_space import RegularSpace
from ..utils.exceptions import InputValidationError
from .modes import SpaceMode
from .rational import Rational


class GraphMetadata(BaseModel):
    """Vertices and arc endpoints of a digraph whose last arc is the return arc r = (t, s)"""

    model_config = ConfigDict(frozen=True)

    vertices: Tuple[int, ...]
    arcs: Tuple[Tuple[int, int], ...]
    source: int
    sink: int

    @model_validator(mode="after")
    def check_graph(self):
        known = set(self.vertices)
        if len(known) != len(self.vertices):
            raise InputValidationError("vertex labels must be distinct")
        if self.source not in known or self.sink not in known:
            raise InputValidationError("source and sink must be declared vertices")
        if self.source == self.sink:
            raise InputValidationError("source and sink must differ")
        for position, (tail, head) in enumerate(self.arcs, start=1):
            if tail not in known or head not in known:
                raise InputValidationError(
                    f"arc {position} ({tail}, {head}) references an undeclared vertex",
                    {"arc": position},
                )
            if tail == head:
                raise InputValidationError(
                    f"arc {position} ({tail}, {head}) is a self-loop", {"arc": position}
                )
        if not self.arcs or self.arcs[-1] != (self.sink, self.source):
            raise InputValidationError("the last arc must be the return arc (t, s)")
        return self

    @property
    def return_arc(self) -> int:
        return len(self.arcs) - 1


class Instance(BaseModel):
    """A regular space, the distinguished index r and capacities on E minus r

    c_r is conceptually infinite and never stored.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    space: RegularSpace
    r: int = Field(..., description="Distinguished ground index (0-based)")
    capacities: Dict[int, Rational] = Field(
        ..., description="Capacity of every ground index except r"
    )
    graph: Optional[GraphMetadata] = Field(
        None, description="Digraph the space was built from, if any"
    )

    @field_validator("capacities", mode="before")
    @classmethod
    def coerce_capacities(cls, v):
        return {int(j): value for j, value in dict(v).items()}

    @model_validator(mode="after")
    def check_instance(self):
        n = self.space.ground_size
        if not 0 <= self.r < n:
            raise InputValidationError(
                f"r = {self.r + 1} is outside the ground set 1..{n}", {"r": self.r + 1}
            )
        expected = set(range(n)) - {self.r}
        if set(self.capacities) != expected:
            missing = sorted(j + 1 for j in expected - set(self.capacities))
            extra = sorted(j + 1 for j in set(self.capacities) - expected)
            raise InputValidationError(
                "capacities must cover exactly the indices other than r",
                {"missing": missing, "extra": extra},
            )
        for j, value in self.capacities.items():
            if value < 0:
                raise InputValidationError(
                    f"capacity of index {j + 1} is negative: {value}", {"index": j + 1}
                )
        return self

    @property
    def ground_size(self) -> int:
        return self.space.ground_size

    @property
    def mode(self) -> SpaceMode:
        return self.space.mode

    def capacity(self, j: int) -> Fraction:
        return self.capacities[j]

    def constrained_indices(self) -> Tuple[int, ...]:
        return tuple(j for j in range(self.ground_size) if j != self.r)
