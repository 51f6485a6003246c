"""r-paths, 1-norm length and the meet/join uncrossing of two paths"""

from fractions import Fraction
from typing import List, Sequence, Union

from ..linalg.rational import add
from ..models.paths import LengthInequality, PathPair, PropertyCheck, PropertyReport, RPath
from ..models.vectors import SignedVector
from ..utils.exceptions import DimensionMismatchError, PathAlgebraError
from .regular_space import RegularSpace, conformal_decomposition

VectorLike = Union[RPath, SignedVector, Sequence]


def length(vector: VectorLike) -> Fraction:
    """1-norm; the support size for a primitive vector"""
    if isinstance(vector, (RPath, SignedVector)):
        return Fraction(len(vector))
    return sum((abs(Fraction(a)) for a in vector), Fraction(0))


def _check_compatible(first: RPath, second: RPath) -> None:
    if first.ground_size != second.ground_size or first.r != second.r:
        raise DimensionMismatchError(
            "paths belong to different spaces or use different r",
            {
                "ground_sizes": [first.ground_size, second.ground_size],
                "r": [first.r + 1, second.r + 1],
            },
        )


def are_conformal(first: RPath, second: RPath) -> bool:
    """False iff some index carries opposite signs"""
    _check_compatible(first, second)
    return all(first.sign_at(j) * sign != -1 for j, sign in second.support)


def norm_additivity(first: RPath, second: RPath) -> bool:
    """True iff |P + Q| = |P| + |Q|"""
    _check_compatible(first, second)
    return length(add(first.dense(), second.dense())) == length(first) + length(second)


def orient_at(vector: SignedVector, r: int) -> RPath:
    """The orientation of a primitive vector through r that carries +1 at r"""
    if vector.sign_at(r) < 0:
        vector = vector.negate()
    return RPath(underlying=vector, r=r)


def r_paths(space: RegularSpace, r: int) -> List[RPath]:
    """Every r-path of the space, in circuit enumeration order"""
    return [orient_at(circuit, r) for circuit in space.circuits() if circuit.sign_at(r)]


class PathAlgebra:
    """Meet/join operations on the r-paths of one regular space"""

    def __init__(self, space: RegularSpace, r: int):
        self.space = space
        self.r = r

    def paths(self) -> List[RPath]:
        return r_paths(self.space, self.r)

    def _check(self, first: RPath, second: RPath) -> None:
        _check_compatible(first, second)
        if first.r != self.r or first.ground_size != self.space.ground_size:
            raise DimensionMismatchError(
                "paths do not belong to this path algebra",
                {"r": first.r + 1, "expected_r": self.r + 1},
            )

    def conformal_pair_decomposition(self, first: RPath, second: RPath) -> List[SignedVector]:
        """Full conformal decomposition of P + Q into primitive vectors"""
        self._check(first, second)
        return conformal_decomposition(add(first.dense(), second.dense()), self.space)

    def conformal_pair(self, first: RPath, second: RPath) -> PathPair:
        """The two summands of P + Q that carry +1 at r"""
        summands = self.conformal_pair_decomposition(first, second)
        through_r = [s for s in summands if s.sign_at(self.r) != 0]
        if len(through_r) != 2 or any(s.sign_at(self.r) != 1 for s in through_r):
            raise PathAlgebraError(
                f"P + Q decomposed into {len(through_r)} summands through r, expected 2",
                {
                    "P": first.format(),
                    "Q": second.format(),
                    "summands": [s.format() for s in summands],
                },
            )
        meet, join = (RPath(underlying=s, r=self.r) for s in through_r)
        return PathPair.canonical(meet, join)

    def check_pair_properties(
        self, first: RPath, second: RPath, pair: PathPair
    ) -> PropertyReport:
        """Verify the sign properties (a)-(d) of a meet/join pair at every index"""
        self._check(first, second)
        offending = {"a": [], "b": [], "c": [], "d": []}
        for j in range(self.space.ground_size):
            p, q = first.sign_at(j), second.sign_at(j)
            m, n = pair.first.sign_at(j), pair.second.sign_at(j)
            if m != 0 and m not in (p, q):
                offending["a"].append(j + 1)
            # (b) is read with the second member on both sides
            if n != 0 and n not in (p, q):
                offending["b"].append(j + 1)
            if p * q == -1 and (m != 0 or n != 0):
                offending["c"].append(j + 1)
            if m * n != 0 and not (m == n == p == q):
                offending["d"].append(j + 1)
        return PropertyReport(
            **{
                name: PropertyCheck(passed=not indices, offending=indices)
                for name, indices in offending.items()
            }
        )

    def length_inequality(self, first: RPath, second: RPath) -> LengthInequality:
        pair = self.conformal_pair(first, second)
        lhs = length(pair.first) + length(pair.second)
        rhs = length(first) + length(second)
        return LengthInequality(lhs=lhs, rhs=rhs, strict=lhs < rhs)


def conformal_pair(first: RPath, second: RPath, space: RegularSpace) -> PathPair:
    return PathAlgebra(space, first.r).conformal_pair(first, second)


def check_pair_properties(
    first: RPath, second: RPath, pair: PathPair, space: RegularSpace
) -> PropertyReport:
    return PathAlgebra(space, first.r).check_pair_properties(first, second, pair)


def length_inequality(first: RPath, second: RPath, space: RegularSpace) -> LengthInequality:
    return PathAlgebra(space, first.r).length_inequality(first, second)
