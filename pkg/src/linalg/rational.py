"""Exact rational linear algebra

Every routine works on ``fractions.Fraction`` entries; nothing here ever
rounds. Matrices are small and dense, so a tuple-of-tuples grid is used
throughout.
"""

from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from ..utils.exceptions import DimensionMismatchError, InputValidationError

Number = Union[int, Fraction]
Vector = Tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def as_vector(values: Iterable[Number]) -> Vector:
    """Convert any iterable of integers or fractions into a rational vector"""
    return tuple(Fraction(value) for value in values)


def support(values: Sequence[Number]) -> Tuple[int, ...]:
    """Indices of the nonzero components"""
    return tuple(j for j, value in enumerate(values) if value != 0)


def is_zero(values: Sequence[Number]) -> bool:
    return all(value == 0 for value in values)


def add(x: Sequence[Number], y: Sequence[Number]) -> Vector:
    _check_same_dimension(x, y)
    return tuple(Fraction(a) + b for a, b in zip(x, y))


def subtract(x: Sequence[Number], y: Sequence[Number]) -> Vector:
    _check_same_dimension(x, y)
    return tuple(Fraction(a) - b for a, b in zip(x, y))


def scale(x: Sequence[Number], factor: Number) -> Vector:
    return tuple(Fraction(a) * factor for a in x)


def axpy(alpha: Number, x: Sequence[Number], y: Sequence[Number]) -> Vector:
    """Return alpha * x + y"""
    _check_same_dimension(x, y)
    return tuple(alpha * Fraction(a) + b for a, b in zip(x, y))


def dot(x: Sequence[Number], y: Sequence[Number]) -> Fraction:
    _check_same_dimension(x, y)
    return sum((Fraction(a) * b for a, b in zip(x, y)), ZERO)


def normalize_leading(x: Sequence[Number]) -> Vector:
    """Scale a nonzero vector so that its first nonzero entry is +1"""
    for value in x:
        if value != 0:
            return tuple(Fraction(a) / value for a in x)
    return as_vector(x)


def _check_same_dimension(x: Sequence[Number], y: Sequence[Number]) -> None:
    if len(x) != len(y):
        raise DimensionMismatchError(
            f"dimension mismatch: {len(x)} != {len(y)}",
            {"left": len(x), "right": len(y)},
        )


class RationalMatrix:
    """Dense rectangular matrix of rationals with at least one row and column"""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence[Number]]):
        grid = tuple(as_vector(row) for row in entries)
        if not grid or not grid[0]:
            raise InputValidationError("a matrix needs at least one row and column")
        width = len(grid[0])
        for i, row in enumerate(grid):
            if len(row) != width:
                raise DimensionMismatchError(
                    f"row {i} has {len(row)} entries, expected {width}",
                    {"row": i},
                )
        self.rows = len(grid)
        self.cols = width
        self.entries: Tuple[Vector, ...] = grid

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls([[ZERO] * cols for _ in range(rows)])

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Number]], cols: int) -> "RationalMatrix":
        """Build from a possibly empty row list; an empty list becomes a zero row"""
        if not rows:
            return cls.zeros(1, cols)
        return cls(rows)

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        return self.entries[i][j]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(a) for a in row) for row in self.entries)
        return f"RationalMatrix([{body}])"

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.entries)

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix([self.column(j) for j in range(self.cols)])

    def select_columns(self, columns: Sequence[int]) -> "RationalMatrix":
        return RationalMatrix([[row[j] for j in columns] for row in self.entries])

    def submatrix(self, rows: Sequence[int], columns: Sequence[int]) -> "RationalMatrix":
        return RationalMatrix([[self.entries[i][j] for j in columns] for i in rows])

    def apply(self, x: Sequence[Number]) -> Vector:
        """Matrix-vector product"""
        if len(x) != self.cols:
            raise DimensionMismatchError(
                f"vector of dimension {len(x)} cannot multiply a {self.rows}x{self.cols} matrix",
                {"vector": len(x), "cols": self.cols},
            )
        return tuple(dot(row, x) for row in self.entries)

    def annihilates(self, x: Sequence[Number]) -> bool:
        """True iff Mx = 0 exactly"""
        return is_zero(self.apply(x))


def row_reduce(matrix: RationalMatrix) -> Tuple[RationalMatrix, List[int]]:
    """Reduced row-echelon form and pivot columns"""
    grid = [list(row) for row in matrix.entries]
    pivots: List[int] = []
    lead = 0
    for col in range(matrix.cols):
        if lead >= matrix.rows:
            break
        pivot_row = next(
            (i for i in range(lead, matrix.rows) if grid[i][col] != 0), None
        )
        if pivot_row is None:
            continue
        grid[lead], grid[pivot_row] = grid[pivot_row], grid[lead]
        pivot_value = grid[lead][col]
        if pivot_value != 1:
            grid[lead] = [a / pivot_value for a in grid[lead]]
        for i in range(matrix.rows):
            if i != lead and grid[i][col] != 0:
                factor = grid[i][col]
                grid[i] = [a - factor * b for a, b in zip(grid[i], grid[lead])]
        pivots.append(col)
        lead += 1
    return RationalMatrix(grid), pivots


def rank(matrix: RationalMatrix) -> int:
    return len(row_reduce(matrix)[1])


def kernel_basis(matrix: RationalMatrix) -> List[Vector]:
    """Basis of the null space, each vector scaled to a leading +1"""
    reduced, pivots = row_reduce(matrix)
    pivot_set = set(pivots)
    basis: List[Vector] = []
    for free in range(matrix.cols):
        if free in pivot_set:
            continue
        vector = [ZERO] * matrix.cols
        vector[free] = ONE
        for row_index, pivot in enumerate(pivots):
            vector[pivot] = -reduced[row_index, free]
        basis.append(normalize_leading(vector))
    return basis


def row_space_basis(matrix: RationalMatrix) -> List[Vector]:
    """Nonzero rows of the reduced row-echelon form"""
    reduced, pivots = row_reduce(matrix)
    return [reduced.row(i) for i in range(len(pivots))]


def in_span(vector: Sequence[Number], basis: Sequence[Sequence[Number]]) -> bool:
    """True iff vector is a rational linear combination of the basis"""
    for member in basis:
        _check_same_dimension(vector, member)
    if is_zero(vector):
        return True
    if not basis:
        return False
    spanned = rank(RationalMatrix(basis))
    return rank(RationalMatrix([*basis, vector])) == spanned


def determinant(matrix: RationalMatrix) -> Fraction:
    if matrix.rows != matrix.cols:
        raise DimensionMismatchError(
            f"determinant of a non-square {matrix.rows}x{matrix.cols} matrix"
        )
    grid = [list(row) for row in matrix.entries]
    size = matrix.rows
    result = ONE
    for col in range(size):
        pivot_row = next((i for i in range(col, size) if grid[i][col] != 0), None)
        if pivot_row is None:
            return ZERO
        if pivot_row != col:
            grid[col], grid[pivot_row] = grid[pivot_row], grid[col]
            result = -result
        pivot_value = grid[col][col]
        result *= pivot_value
        for i in range(col + 1, size):
            if grid[i][col] != 0:
                factor = grid[i][col] / pivot_value
                grid[i] = [a - factor * b for a, b in zip(grid[i], grid[col])]
    return result


def solve(matrix: RationalMatrix, rhs: Sequence[Number]) -> Optional[Vector]:
    """One solution of Mx = rhs with all free variables at zero, or None"""
    if len(rhs) != matrix.rows:
        raise DimensionMismatchError(
            f"right-hand side of dimension {len(rhs)} for {matrix.rows} equations"
        )
    augmented = RationalMatrix(
        [[*row, Fraction(b)] for row, b in zip(matrix.entries, rhs)]
    )
    reduced, pivots = row_reduce(augmented)
    if matrix.cols in pivots:
        return None
    solution = [ZERO] * matrix.cols
    for row_index, pivot in enumerate(pivots):
        solution[pivot] = reduced[row_index, matrix.cols]
    return tuple(solution)


class IncrementalEchelon:
    """Echelon basis that grows one column at a time

    Used to test independence of column sets without re-reducing the whole
    selection on every extension.
    """

    __slots__ = ("_rows",)

    def __init__(self, rows: Tuple[Tuple[int, Vector], ...] = ()):
        self._rows = rows

    def reduce(self, vector: Sequence[Number]) -> Vector:
        residual = as_vector(vector)
        for pivot, row in self._rows:
            coefficient = residual[pivot]
            if coefficient != 0:
                residual = tuple(a - coefficient * b for a, b in zip(residual, row))
        return residual

    def extended(self, vector: Sequence[Number]) -> Optional["IncrementalEchelon"]:
        """The echelon basis with vector added, or None if vector is dependent"""
        residual = self.reduce(vector)
        pivot = next((i for i, a in enumerate(residual) if a != 0), None)
        if pivot is None:
            return None
        lead = residual[pivot]
        return IncrementalEchelon(
            self._rows + ((pivot, tuple(a / lead for a in residual)),)
        )
