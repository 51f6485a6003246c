"""Exact LP reference for the max-flow objective

Solves  max f_r  s.t.  f in the space, 0 <= f_j <= c_j (j != r)  with a
dense rational tableau and Bland's rule, independently of circuits and
augmenting paths. f_r >= 0 is added to the model; the zero flow is feasible,
so the optimum is unaffected.
"""

import logging
from fractions import Fraction
from typing import List, Optional

from ..linalg import row_space_basis
from ..linalg.rational import ZERO, Vector
from ..models.instance import Instance
from ..utils.exceptions import InvariantViolationError, SizeGuardError, UnboundedProblemError
from .settings import get_settings

logger = logging.getLogger(__name__)


class ExactSimplex:
    """Tableau simplex over ``A x = b, x >= 0`` with ``b >= 0``

    The initial basis is given by the caller. Columns listed in ``artificial``
    start basic at zero and are pivoted out before optimizing.
    """

    def __init__(
        self,
        rows: List[List[Fraction]],
        rhs: List[Fraction],
        basis: List[int],
        artificial: Optional[set] = None,
    ):
        self.rows = [list(row) for row in rows]
        self.rhs = list(rhs)
        self.basis = list(basis)
        self.artificial = set(artificial or ())
        self.pivots = 0

    @property
    def width(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def _pivot(self, row: int, col: int) -> None:
        value = self.rows[row][col]
        self.rows[row] = [a / value for a in self.rows[row]]
        self.rhs[row] /= value
        for i in range(len(self.rows)):
            factor = self.rows[i][col]
            if i != row and factor != 0:
                self.rows[i] = [a - factor * b for a, b in zip(self.rows[i], self.rows[row])]
                self.rhs[i] -= factor * self.rhs[row]
        self.basis[row] = col
        self.pivots += 1

    def drive_out_artificials(self) -> None:
        """Replace zero-valued artificial basics; drop rows that are redundant"""
        row = 0
        while row < len(self.rows):
            if self.basis[row] not in self.artificial:
                row += 1
                continue
            if self.rhs[row] != 0:
                raise InvariantViolationError("artificial variable basic at a nonzero value")
            col = next(
                (
                    k
                    for k in range(self.width)
                    if k not in self.artificial and self.rows[row][k] != 0
                ),
                None,
            )
            if col is None:
                del self.rows[row], self.rhs[row], self.basis[row]
                continue
            self._pivot(row, col)
            row += 1

    def maximize(self, objective: List[Fraction]) -> Fraction:
        """Optimal value of objective . x, raising when unbounded"""
        while True:
            reduced = [
                objective[k]
                - sum(
                    (objective[b] * self.rows[i][k] for i, b in enumerate(self.basis)),
                    ZERO,
                )
                for k in range(self.width)
            ]
            entering = next(
                (
                    k
                    for k in range(self.width)
                    if k not in self.artificial and k not in self.basis and reduced[k] > 0
                ),
                None,
            )
            if entering is None:
                return sum(
                    (objective[b] * self.rhs[i] for i, b in enumerate(self.basis)), ZERO
                )
            candidates = [
                (self.rhs[i] / self.rows[i][entering], self.basis[i], i)
                for i in range(len(self.rows))
                if self.rows[i][entering] > 0
            ]
            if not candidates:
                raise UnboundedProblemError("objective is unbounded")
            _, _, leaving = min(candidates)
            self._pivot(leaving, entering)

    def solution(self) -> Vector:
        values = [ZERO] * self.width
        for i, b in enumerate(self.basis):
            values[b] = self.rhs[i]
        return tuple(values)


def lp_reference_solve(
    instance: Instance, ground_limit: Optional[int] = None, override: bool = False
) -> Fraction:
    """Exact optimum of max f_r over feasible flows"""
    n = instance.ground_size
    limit = ground_limit if ground_limit is not None else get_settings().reference_ground_limit
    if n > limit and not override:
        raise SizeGuardError(
            f"LP reference over {n} elements exceeds the limit {limit}",
            {"limit": limit, "ground_size": n},
        )
    if n > limit:
        logger.warning("running the LP reference over %d elements", n)

    constrained = instance.constrained_indices()
    equalities = row_space_basis(instance.space.complement)
    slack_of = {j: n + k for k, j in enumerate(constrained)}
    first_artificial = n + len(constrained)
    width = first_artificial + len(equalities)

    rows: List[List[Fraction]] = []
    rhs: List[Fraction] = []
    basis: List[int] = []
    for j in constrained:
        row = [ZERO] * width
        row[j] = Fraction(1)
        row[slack_of[j]] = Fraction(1)
        rows.append(row)
        rhs.append(instance.capacity(j))
        basis.append(slack_of[j])
    for i, equation in enumerate(equalities):
        row = [*equation, *([ZERO] * (width - n))]
        row[first_artificial + i] = Fraction(1)
        rows.append(row)
        rhs.append(ZERO)
        basis.append(first_artificial + i)

    if not rows:
        # no capacities and no equations: f_r is free to grow
        raise UnboundedProblemError("objective is unbounded")

    simplex = ExactSimplex(
        rows, rhs, basis, artificial=set(range(first_artificial, width))
    )
    simplex.drive_out_artificials()
    objective = [ZERO] * width
    objective[instance.r] = Fraction(1)
    value = simplex.maximize(objective)

    flow = simplex.solution()[:n]
    if not instance.space.contains(flow):
        raise InvariantViolationError("LP reference optimum is not a member of the space")
    logger.info("LP reference optimum %s after %d pivots", value, simplex.pivots)
    return value


__all__ = ["ExactSimplex", "lp_reference_solve"]
