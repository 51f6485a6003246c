"""Sparse sign vectors: primitive vectors and the raw material of r-paths"""

from fractions import Fraction
from typing import Dict, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, model_validator

from ..utils.exceptions import InputValidationError

Number = Union[int, Fraction]


class SignedVector(BaseModel):
    """Association from ground indices to signs in {-1, +1}

    Indices are 0-based internally and printed 1-based.
    """

    model_config = ConfigDict(frozen=True)

    ground_size: int
    support: Tuple[Tuple[int, int], ...]

    @model_validator(mode="after")
    def check_support(self):
        if not self.support:
            raise InputValidationError("a signed vector needs a nonempty support")
        previous = -1
        for index, sign in self.support:
            if not 0 <= index < self.ground_size:
                raise InputValidationError(
                    f"index {index + 1} outside ground set of size {self.ground_size}"
                )
            if index <= previous:
                raise InputValidationError("support indices must be strictly increasing")
            if sign not in (-1, 1):
                raise InputValidationError(f"sign {sign} at index {index + 1} is not +-1")
            previous = index
        return self

    @classmethod
    def from_dense(cls, values: Sequence[Number]) -> "SignedVector":
        """Build from a dense vector whose entries must lie in {-1, 0, +1}"""
        pairs = []
        for j, value in enumerate(values):
            if value == 0:
                continue
            if value not in (-1, 1):
                raise InputValidationError(
                    f"component {j + 1} equals {value}, not a primitive entry"
                )
            pairs.append((j, int(value)))
        return cls(ground_size=len(values), support=tuple(pairs))

    @classmethod
    def from_signs(cls, ground_size: int, signs: Dict[int, int]) -> "SignedVector":
        return cls(ground_size=ground_size, support=tuple(sorted(signs.items())))

    @classmethod
    def parse(cls, text: str, ground_size: int) -> "SignedVector":
        """Parse "+1 -3 +4" (1-based indices with explicit signs)"""
        signs: Dict[int, int] = {}
        for token in text.split():
            if len(token) < 2 or token[0] not in "+-" or not token[1:].isdigit():
                raise InputValidationError(f"bad signed index {token!r}")
            index = int(token[1:]) - 1
            if index in signs:
                raise InputValidationError(f"index {index + 1} appears twice in {text!r}")
            signs[index] = 1 if token[0] == "+" else -1
        return cls.from_signs(ground_size, signs)

    @property
    def indices(self) -> Tuple[int, ...]:
        return tuple(index for index, _ in self.support)

    @property
    def signs(self) -> Tuple[int, ...]:
        return tuple(sign for _, sign in self.support)

    def sign_at(self, index: int) -> int:
        for j, sign in self.support:
            if j == index:
                return sign
            if j > index:
                break
        return 0

    def dense(self) -> Tuple[Fraction, ...]:
        values = [Fraction(0)] * self.ground_size
        for index, sign in self.support:
            values[index] = Fraction(sign)
        return tuple(values)

    def negate(self) -> "SignedVector":
        return SignedVector(
            ground_size=self.ground_size,
            support=tuple((index, -sign) for index, sign in self.support),
        )

    def __len__(self) -> int:
        return len(self.support)

    def format(self) -> str:
        return " ".join(
            f"{'+' if sign > 0 else '-'}{index + 1}" for index, sign in self.support
        )

    def sort_key(self) -> Tuple:
        """Support size, then support indices, then signs with +1 first"""
        return (
            len(self.support),
            self.indices,
            tuple(0 if sign > 0 else 1 for sign in self.signs),
        )
