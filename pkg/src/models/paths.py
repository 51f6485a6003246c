"""r-paths and the reports produced by the path algebra"""

from fractions import Fraction
from typing import List, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..utils.exceptions import InputValidationError
from .rational import Rational
from .vectors import SignedVector


class RPath(BaseModel):
    """A primitive vector with component +1 at the distinguished index r"""

    model_config = ConfigDict(frozen=True)

    underlying: SignedVector
    r: int

    @model_validator(mode="after")
    def check_r_component(self):
        if self.underlying.sign_at(self.r) != 1:
            raise InputValidationError(
                f"an r-path must carry +1 at r = {self.r + 1}",
                {"r": self.r + 1, "path": self.underlying.format()},
            )
        return self

    @property
    def ground_size(self) -> int:
        return self.underlying.ground_size

    @property
    def support(self) -> Tuple[Tuple[int, int], ...]:
        return self.underlying.support

    @property
    def indices(self) -> Tuple[int, ...]:
        return self.underlying.indices

    def sign_at(self, index: int) -> int:
        return self.underlying.sign_at(index)

    def dense(self) -> Tuple[Fraction, ...]:
        return self.underlying.dense()

    def __len__(self) -> int:
        return len(self.underlying)

    def format(self) -> str:
        return self.underlying.format()

    def sort_key(self) -> Tuple:
        return self.underlying.sort_key()


class PathPair(BaseModel):
    """Unordered pair of r-paths presented in canonical order"""

    model_config = ConfigDict(frozen=True)

    first: RPath
    second: RPath

    @model_validator(mode="after")
    def check_same_r(self):
        if self.first.r != self.second.r:
            raise InputValidationError("both members of a pair must share r")
        if self.first.ground_size != self.second.ground_size:
            raise InputValidationError("both members of a pair must share the ground set")
        return self

    @classmethod
    def canonical(cls, a: RPath, b: RPath) -> "PathPair":
        """Lexicographically smaller support first"""
        if (b.indices, b.underlying.signs) < (a.indices, a.underlying.signs):
            a, b = b, a
        return cls(first=a, second=b)

    def members(self) -> Tuple[RPath, RPath]:
        return self.first, self.second


class PropertyCheck(BaseModel):
    """Outcome of one uncrossing property, with 1-based offending indices"""

    passed: bool
    offending: List[int] = Field(default_factory=list)


class PropertyReport(BaseModel):
    """Checks of the four sign properties of a meet/join pair"""

    a: PropertyCheck
    b: PropertyCheck
    c: PropertyCheck
    d: PropertyCheck

    @property
    def all_passed(self) -> bool:
        return self.a.passed and self.b.passed and self.c.passed and self.d.passed


class LengthInequality(BaseModel):
    """|P meet Q| + |P join Q| against |P| + |Q|"""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    lhs: Rational
    rhs: Rational
    strict: bool
