"""Tests for the exact LP reference"""

from fractions import Fraction

import pytest

from src.services.reference import ExactSimplex, lp_reference_solve
from src.utils.exceptions import SizeGuardError, UnboundedProblemError


class TestLPReference:
    """Optimum values independent of augmenting paths"""

    def test_diamond(self, diamond):
        assert lp_reference_solve(diamond) == 2

    def test_zero_capacities(self, diamond_zero):
        assert lp_reference_solve(diamond_zero) == 0

    def test_two_vertex_coflow(self, two_vertex_coflow):
        assert lp_reference_solve(two_vertex_coflow) == 0

    def test_chain_coflow(self, chain_coflow):
        assert lp_reference_solve(chain_coflow) == 5

    def test_diamond_coflow(self, diamond_coflow):
        # tensions along a directed s-t route and r sum to zero, so f_r <= 0
        assert lp_reference_solve(diamond_coflow) == 0

    def test_fractional_capacities(self, triangle):
        halved = triangle.model_copy(
            update={"capacities": {0: Fraction(1, 2), 1: Fraction(3, 4)}}
        )
        assert lp_reference_solve(halved) == Fraction(1, 2)

    def test_unbounded_coflow(self, bridge_coflow):
        with pytest.raises(UnboundedProblemError):
            lp_reference_solve(bridge_coflow)

    def test_unbounded_kernel(self, unbounded_kernel):
        with pytest.raises(UnboundedProblemError):
            lp_reference_solve(unbounded_kernel)

    def test_ground_guard(self, diamond):
        with pytest.raises(SizeGuardError):
            lp_reference_solve(diamond, ground_limit=3)
        assert lp_reference_solve(diamond, ground_limit=3, override=True) == 2


class TestExactSimplex:
    """The tableau routine on a textbook problem"""

    def test_small_lp(self):
        # max x + y  s.t.  x + 2y + s1 = 4,  3x + y + s2 = 6
        simplex = ExactSimplex(
            rows=[
                [Fraction(1), Fraction(2), Fraction(1), Fraction(0)],
                [Fraction(3), Fraction(1), Fraction(0), Fraction(1)],
            ],
            rhs=[Fraction(4), Fraction(6)],
            basis=[2, 3],
        )
        value = simplex.maximize([Fraction(1), Fraction(1), Fraction(0), Fraction(0)])
        assert value == Fraction(14, 5)
        assert simplex.solution()[:2] == (Fraction(8, 5), Fraction(6, 5))
