"""Totally unimodular generator matrices"""

from typing import Tuple

from pydantic import BaseModel, ConfigDict, field_validator

from ..linalg import RationalMatrix
from ..utils.exceptions import DimensionMismatchError, EntryRangeError


class TUMatrix(BaseModel):
    """Integer matrix with entries in {-1, 0, +1}, claimed totally unimodular

    Only the entry range is checked here; the exhaustive determinant scan is
    opt-in through ``verify_tu``.
    """

    model_config = ConfigDict(frozen=True)

    entries: Tuple[Tuple[int, ...], ...]

    @field_validator("entries", mode="before")
    @classmethod
    def check_entries(cls, v):
        rows = tuple(tuple(row) for row in v)
        if not rows or not rows[0]:
            raise DimensionMismatchError("a generator needs at least one row and column")
        width = len(rows[0])
        for i, row in enumerate(rows):
            if len(row) != width:
                raise DimensionMismatchError(
                    f"row {i + 1} has {len(row)} entries, expected {width}",
                    {"row": i + 1},
                )
            for j, entry in enumerate(row):
                if isinstance(entry, bool) or entry not in (-1, 0, 1):
                    raise EntryRangeError(
                        f"entry {entry!r} at row {i + 1}, column {j + 1} is not in {{-1, 0, +1}}",
                        {"row": i + 1, "column": j + 1, "entry": entry},
                    )
        return tuple(tuple(int(entry) for entry in row) for row in rows)

    @classmethod
    def from_rows(cls, rows) -> "TUMatrix":
        return cls(entries=rows)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def to_rational(self) -> RationalMatrix:
        return RationalMatrix(self.entries)
