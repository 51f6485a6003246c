"""Exact rational linear algebra"""

from .rational import (
    RationalMatrix,
    Vector,
    IncrementalEchelon,
    row_reduce,
    rank,
    kernel_basis,
    row_space_basis,
    in_span,
    determinant,
    solve,
)

__all__ = [
    "RationalMatrix",
    "Vector",
    "IncrementalEchelon",
    "row_reduce",
    "rank",
    "kernel_basis",
    "row_space_basis",
    "in_span",
    "determinant",
    "solve",
]
