"""Regular spaces: construction, TU verification, circuits and conformal decomposition"""

import itertools
import logging
import threading
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from pydantic import BaseModel

from ..linalg import (
    IncrementalEchelon,
    RationalMatrix,
    Vector,
    determinant,
    kernel_basis,
    row_space_basis,
)
from ..linalg.rational import as_vector, axpy, is_zero, normalize_leading, support
from ..models.matrix import TUMatrix
from ..models.modes import SpaceMode
from ..models.vectors import SignedVector
from ..utils.exceptions import (
    DimensionMismatchError,
    InputValidationError,
    NotInSpaceError,
    RegularityViolationError,
    SizeGuardError,
)
from .settings import get_settings

logger = logging.getLogger(__name__)


class RegularSpace:
    """Kernel or row space of a TU generator, with an exact basis

    Membership is decided through ``complement``, a matrix whose kernel is
    the space: the generator itself in kernel mode, the kernel basis of the
    generator (as rows) in rowspace mode. Circuits are the minimal dependent
    column sets of the complement and are cached on first request.
    """

    def __init__(
        self,
        generator: TUMatrix,
        mode: SpaceMode,
        basis: Sequence[Vector],
        complement: RationalMatrix,
    ):
        self.generator = generator
        self.mode = SpaceMode(mode)
        self.basis: Tuple[Vector, ...] = tuple(basis)
        self.complement = complement
        self._circuits: Optional[Tuple[SignedVector, ...]] = None
        self._lock = threading.Lock()

    @property
    def ground_size(self) -> int:
        return self.generator.cols

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def __repr__(self) -> str:
        return (
            f"RegularSpace(mode={self.mode.value}, n={self.ground_size}, "
            f"dim={self.dimension})"
        )

    def contains(self, vector: Sequence) -> bool:
        """True iff vector is a member of the space"""
        if len(vector) != self.ground_size:
            raise DimensionMismatchError(
                f"vector of dimension {len(vector)} in a space over {self.ground_size} elements"
            )
        return self.complement.annihilates(vector)

    def circuits(
        self, ground_limit: Optional[int] = None, override: bool = False
    ) -> Tuple[SignedVector, ...]:
        """All primitive vectors up to negation, computed once"""
        if self._circuits is None:
            with self._lock:
                if self._circuits is None:
                    self._circuits = tuple(
                        _scan_circuits(self, ground_limit, override)
                    )
                    logger.info(
                        "cached %d circuits for %r", len(self._circuits), self
                    )
        return self._circuits


class TUViolation(BaseModel):
    """Square submatrix whose determinant is outside {-1, 0, +1} (1-based indices)"""

    rows: Tuple[int, ...]
    cols: Tuple[int, ...]
    determinant: int

    def describe(self) -> str:
        rows = ",".join(str(i) for i in self.rows)
        cols = ",".join(str(j) for j in self.cols)
        return f"submatrix rows {{{rows}}} cols {{{cols}}}, det {self.determinant}"


def build_space(generator: TUMatrix, mode: SpaceMode) -> RegularSpace:
    """Regular space spanned (rowspace) or annihilated (kernel) by the generator"""
    matrix = generator.to_rational()
    null_basis = kernel_basis(matrix)
    if SpaceMode(mode) == SpaceMode.KERNEL:
        basis = null_basis
        complement = matrix
    else:
        basis = row_space_basis(matrix)
        complement = RationalMatrix.from_rows(null_basis, matrix.cols)
    space = RegularSpace(generator, mode, basis, complement)
    logger.debug("built %r", space)
    return space


def find_tu_violation(
    generator: TUMatrix, size_limit: Optional[int] = None, override: bool = False
) -> Optional[TUViolation]:
    """Exhaustive determinant scan; the first offending submatrix or None"""
    limit = size_limit if size_limit is not None else get_settings().tu_size_limit
    smaller_side = min(generator.rows, generator.cols)
    if smaller_side > limit and not override:
        raise SizeGuardError(
            f"TU verification of a {generator.rows}x{generator.cols} matrix exceeds "
            f"the size limit {limit}; pass an override to scan anyway",
            {"limit": limit},
        )
    if smaller_side > limit:
        logger.warning(
            "scanning all square submatrices of a %dx%d matrix",
            generator.rows,
            generator.cols,
        )
    matrix = generator.to_rational()
    for size in range(1, smaller_side + 1):
        for rows in itertools.combinations(range(generator.rows), size):
            for cols in itertools.combinations(range(generator.cols), size):
                value = determinant(matrix.submatrix(rows, cols))
                if value not in (-1, 0, 1):
                    return TUViolation(
                        rows=tuple(i + 1 for i in rows),
                        cols=tuple(j + 1 for j in cols),
                        determinant=int(value),
                    )
    return None


def verify_tu(
    generator: TUMatrix, size_limit: Optional[int] = None, override: bool = False
) -> bool:
    """True iff every scanned square submatrix has determinant in {-1, 0, +1}"""
    return find_tu_violation(generator, size_limit, override) is None


def _require_member(vector: Sequence, space: RegularSpace) -> Vector:
    values = as_vector(vector)
    if not space.contains(values):
        raise NotInSpaceError(
            "vector is not a member of the space",
            {"vector": [str(a) for a in values]},
        )
    return values


def _require_nonzero(values: Vector) -> None:
    if is_zero(values):
        raise InputValidationError("the zero vector has no elementary part")


def _local_kernel(space: RegularSpace, columns: Sequence[int]) -> List[Vector]:
    """Members of the space supported inside columns, as coordinates on columns"""
    return kernel_basis(space.complement.select_columns(columns))


def is_elementary(vector: Sequence, space: RegularSpace) -> bool:
    """True iff no nonzero member has support strictly inside the support of vector"""
    values = _require_member(vector, space)
    _require_nonzero(values)
    return len(_local_kernel(space, support(values))) == 1


def _to_primitive(values: Vector) -> SignedVector:
    """Scale an elementary vector by its leading magnitude; must land in {-1, 0, +1}"""
    lead = next(a for a in values if a != 0)
    scaled = tuple(a / abs(lead) for a in values)
    if any(a not in (-1, 0, 1) for a in scaled):
        raise RegularityViolationError(
            [j + 1 for j in support(values)], [str(a) for a in values]
        )
    return SignedVector.from_dense(scaled)


def _parallel(x: Sequence[Fraction], y: Sequence[Fraction]) -> bool:
    pivot = next(j for j, a in enumerate(y) if a != 0)
    if x[pivot] == 0:
        return False
    ratio = x[pivot] / y[pivot]
    return all(a == ratio * b for a, b in zip(x, y))


def find_conforming_elementary(vector: Sequence, space: RegularSpace) -> SignedVector:
    """A primitive vector conforming to a nonzero member, supported inside it

    The support is shrunk by subtracting the largest conformal multiple of a
    smaller member until the remaining vector is elementary.
    """
    current = list(_require_member(vector, space))
    _require_nonzero(tuple(current))
    while True:
        columns = support(current)
        local = [current[j] for j in columns]
        kernel = _local_kernel(space, columns)
        if len(kernel) == 1:
            return _to_primitive(tuple(current))
        direction = next(z for z in kernel if not _parallel(z, local))
        if not any(z * y > 0 for z, y in zip(direction, local)):
            direction = tuple(-z for z in direction)
        step = min(y / z for z, y in zip(direction, local) if z * y > 0)
        for position, j in enumerate(columns):
            current[j] -= step * direction[position]


def _check_integral(values: Vector) -> None:
    if any(a.denominator != 1 for a in values):
        raise InputValidationError(
            "conformal decomposition into primitive vectors needs an integral vector",
            {"vector": [str(a) for a in values]},
        )


def conformal_decomposition_grouped(
    vector: Sequence, space: RegularSpace
) -> List[Tuple[SignedVector, int]]:
    """Primitive summands with multiplicities, in extraction order"""
    values = _require_member(vector, space)
    _check_integral(values)
    remaining = values
    summands: List[Tuple[SignedVector, int]] = []
    while not is_zero(remaining):
        primitive = find_conforming_elementary(remaining, space)
        multiplicity = min(abs(remaining[j]) for j in primitive.indices)
        remaining = axpy(-multiplicity, primitive.dense(), remaining)
        summands.append((primitive, int(multiplicity)))
    return summands


def conformal_decomposition(vector: Sequence, space: RegularSpace) -> List[SignedVector]:
    """Primitive vectors, each conforming to vector, summing to it exactly"""
    return [
        primitive
        for primitive, multiplicity in conformal_decomposition_grouped(vector, space)
        for _ in range(multiplicity)
    ]


def is_integral_sum_of_primitives(vector: Sequence, space: RegularSpace) -> bool:
    """Integrality criterion: a member decomposes into conforming primitives iff integral"""
    values = _require_member(vector, space)
    if any(a.denominator != 1 for a in values):
        return False
    total = [Fraction(0)] * len(values)
    for primitive in conformal_decomposition(values, space):
        for index, sign in primitive.support:
            if sign * values[index] <= 0:
                return False
            total[index] += sign
    return tuple(total) == values


def _scan_circuits(
    space: RegularSpace, ground_limit: Optional[int], override: bool
) -> List[SignedVector]:
    limit = ground_limit if ground_limit is not None else get_settings().circuit_ground_limit
    n = space.ground_size
    if n > limit and not override:
        raise SizeGuardError(
            f"circuit enumeration over {n} elements exceeds the limit {limit}",
            {"limit": limit, "ground_size": n},
        )
    if n > limit:
        logger.warning("enumerating circuits over %d elements", n)

    columns = [space.complement.column(j) for j in range(n)]
    circuits: List[SignedVector] = []
    # Supports are scanned by increasing size; a set is extended only while
    # it stays independent, and a dependent set all of whose maximal proper
    # subsets are independent is a circuit.
    level = {(): IncrementalEchelon()}
    while level:
        next_level = {}
        for chosen, echelon in level.items():
            start = chosen[-1] + 1 if chosen else 0
            for element in range(start, n):
                candidate = chosen + (element,)
                if any(
                    candidate[:i] + candidate[i + 1 :] not in level
                    for i in range(len(candidate) - 1)
                ):
                    continue
                extended = echelon.extended(columns[element])
                if extended is not None:
                    next_level[candidate] = extended
                    continue
                circuits.append(_circuit_on(space, candidate))
        level = next_level
    return circuits


def _circuit_on(space: RegularSpace, columns: Tuple[int, ...]) -> SignedVector:
    (local,) = _local_kernel(space, columns)
    dense = [Fraction(0)] * space.ground_size
    for position, j in enumerate(columns):
        dense[j] = local[position]
    return _to_primitive(normalize_leading(dense))


def enumerate_circuits(
    space: RegularSpace, ground_limit: Optional[int] = None, override: bool = False
) -> List[SignedVector]:
    """Primitive vectors up to negation, first nonzero component +1"""
    return list(space.circuits(ground_limit, override))
