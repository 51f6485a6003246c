"""Tests for the Ford-Fulkerson solver and its diagnostics"""

import itertools
from fractions import Fraction

import pytest

from src.formats import serialize_trace
from src.models.modes import OracleKind, SolveStatus
from src.models.paths import RPath
from src.models.trace import FlowState
from src.models.vectors import SignedVector
from src.services.graphs import vertex_potentials
from src.services.path_algebra import PathAlgebra, are_conformal
from src.services.settings import reset_settings
from src.services.solver import (
    FordFulkersonSolver,
    analyze_trace,
    compare_oracles,
    cut_capacity,
    is_feasible,
    max_flow,
    min_cut_certificate,
    shortest_augmenting_paths,
    verify_optimality,
)
from src.utils.exceptions import (
    DimensionMismatchError,
    InvariantViolationError,
    IterationGuardError,
    OracleMismatchError,
)


def scripted(paths):
    """Stand-in for an oracle's shortest_path that replays fixed answers"""
    answers = iter(paths)
    return lambda flow: next(answers, None)


class TestFeasibility:
    """Membership plus capacity bounds"""

    def test_zero_flow(self, triangle):
        assert is_feasible(FlowState.zero(3), triangle)

    def test_within_capacity(self, triangle):
        assert is_feasible([1, 1, 1], triangle)

    def test_over_capacity(self, triangle):
        assert not is_feasible([2, 2, 2], triangle)

    def test_not_a_member(self, triangle):
        assert not is_feasible([1, 0, 0], triangle)

    def test_dimension_mismatch(self, triangle):
        with pytest.raises(DimensionMismatchError):
            is_feasible([0, 0], triangle)


class TestMaxFlow:
    """Known optima and trace shapes"""

    def test_diamond(self, diamond):
        result = max_flow(diamond)
        assert result.status == SolveStatus.OPTIMAL
        assert result.objective == 2
        assert result.trace.lengths == [3, 3]
        assert [s.path.format() for s in result.trace.steps] == ["+1 +4 +6", "+2 +5 +6"]

    def test_diamond_graphic(self, diamond):
        result = max_flow(diamond, OracleKind.GRAPHIC)
        assert result.objective == 2
        assert result.oracle == OracleKind.GRAPHIC

    def test_zero_capacities(self, diamond_zero):
        result = max_flow(diamond_zero)
        assert result.objective == 0
        assert len(result.trace) == 0

    def test_triangle_with_direct_arc(self, triangle_direct):
        result = max_flow(triangle_direct)
        assert result.objective == 2
        assert result.trace.lengths == [2, 3]
        assert result.trace.objectives == [1, 2]

    def test_chain_coflow(self, chain_coflow):
        for oracle in (OracleKind.GENERIC, OracleKind.COGRAPHIC):
            result = max_flow(chain_coflow, oracle)
            assert result.objective == 5
            assert result.trace.lengths == [2, 2]

    def test_two_vertex_coflow(self, two_vertex_coflow):
        assert max_flow(two_vertex_coflow, OracleKind.COGRAPHIC).objective == 0

    def test_fractional_capacities(self, triangle):
        halved = triangle.model_copy(
            update={"capacities": {0: Fraction(1, 2), 1: Fraction(3, 4)}}
        )
        assert max_flow(halved).objective == Fraction(1, 2)

    def test_unbounded_coflow(self, bridge_coflow):
        result = max_flow(bridge_coflow)
        assert result.status == SolveStatus.UNBOUNDED
        assert result.objective is None
        assert result.unbounded_path.format() == "+1"

    def test_unbounded_kernel(self, unbounded_kernel):
        assert max_flow(unbounded_kernel).status == SolveStatus.UNBOUNDED

    def test_flows_stay_integral(self, diamond):
        result = max_flow(diamond)
        current = FlowState.zero(6)
        for step in result.trace.steps:
            current = current.augmented(step.path, step.epsilon)
            assert current.is_integral()
        assert current == result.flow

    def test_deterministic_traces(self, diamond):
        first = serialize_trace(max_flow(diamond).trace)
        second = serialize_trace(max_flow(diamond).trace)
        assert first == second


class TestRuntimeChecks:
    """Iteration guard and per-step invariant checks"""

    def test_iteration_guard(self, diamond):
        solver = FordFulkersonSolver(diamond)
        solver.guard = 1
        with pytest.raises(IterationGuardError):
            solver.solve()

    def test_length_drop_detected(self, triangle_direct):
        solver = FordFulkersonSolver(triangle_direct)
        long_path = RPath(underlying=SignedVector.parse("+1 +2 +4", 4), r=3)
        short_path = RPath(underlying=SignedVector.parse("+3 +4", 4), r=3)
        solver.oracle.shortest_path = scripted([long_path, short_path])
        with pytest.raises(InvariantViolationError):
            solver.solve()

    def test_checks_can_be_disabled(self, triangle_direct):
        solver = FordFulkersonSolver(triangle_direct, check_invariants=False)
        long_path = RPath(underlying=SignedVector.parse("+1 +2 +4", 4), r=3)
        short_path = RPath(underlying=SignedVector.parse("+3 +4", 4), r=3)
        solver.oracle.shortest_path = scripted([long_path, short_path])
        assert solver.solve().objective == 2

    def test_checks_follow_settings(self, monkeypatch, triangle_direct):
        monkeypatch.setenv("REGFLOW_CHECK_INVARIANTS", "false")
        reset_settings()
        assert FordFulkersonSolver(triangle_direct).check_invariants is False


class TestOptimality:
    """Certificates of optimality"""

    def test_solver_output_is_optimal(self, diamond):
        assert verify_optimality(max_flow(diamond).flow, diamond)

    def test_zero_flow_not_optimal(self, diamond):
        assert not verify_optimality(FlowState.zero(6), diamond)

    def test_zero_capacity_zero_flow_optimal(self, diamond_zero):
        assert verify_optimality(FlowState.zero(6), diamond_zero)

    def test_min_cut_matches_objective(self, diamond):
        result = max_flow(diamond)
        cut = min_cut_certificate(result.flow, diamond)
        assert cut == [0, 1]
        assert cut_capacity(cut, diamond) == result.objective

    def test_min_cut_on_direct_arc_triangle(self, triangle_direct):
        result = max_flow(triangle_direct)
        cut = min_cut_certificate(result.flow, triangle_direct)
        assert cut == [0, 2]

    def test_min_cut_needs_maximum_flow(self, diamond):
        with pytest.raises(InvariantViolationError):
            min_cut_certificate(FlowState.zero(6), diamond)

    def test_coflow_potentials(self, chain_coflow):
        result = max_flow(chain_coflow)
        potentials = vertex_potentials(result.flow, chain_coflow.graph)
        assert potentials == {1: 5, 2: 3, 3: 0}


class TestShortestPathLattice:
    """The set of shortest augmenting paths along a run"""

    @pytest.mark.parametrize("fixture", ["diamond", "triangle_direct", "chain_coflow"])
    def test_closed_under_meet_and_join(self, fixture, request):
        instance = request.getfixturevalue(fixture)
        algebra = PathAlgebra(instance.space, instance.r)
        current = FlowState.zero(instance.ground_size)
        for step in max_flow(instance).trace.steps:
            shortest = shortest_augmenting_paths(current, instance)
            assert step.path in shortest
            members = set(shortest)
            for p, q in itertools.combinations(shortest, 2):
                assert are_conformal(p, q)
                pair = algebra.conformal_pair(p, q)
                assert pair.first in members
                assert pair.second in members
            current = current.augmented(step.path, step.epsilon)


class TestTraceAnalysis:
    """Augmentation counts against the bounds"""

    def test_diamond_summary(self, diamond):
        result = max_flow(diamond)
        summary = analyze_trace(result.trace, diamond)
        assert summary.augmentations == 2
        assert summary.squared_ground_bound == 36
        assert summary.vertex_arc_bound == 24
        assert summary.nonconformal_augmentations == 0
        assert summary.longest_conformal_run == 2
        assert summary.length_levels == [3]
        assert summary.lengths_nondecreasing
        assert summary.within_bounds

    def test_coflow_has_no_vertex_arc_bound(self, chain_coflow):
        summary = analyze_trace(max_flow(chain_coflow).trace, chain_coflow)
        assert summary.vertex_arc_bound is None

    def test_empty_trace(self, diamond_zero):
        summary = analyze_trace(max_flow(diamond_zero).trace, diamond_zero)
        assert summary.augmentations == 0
        assert summary.longest_conformal_run == 0


class TestCompareOracles:
    """Generic against specialized oracles"""

    def test_graphic_agrees_on_diamond(self, diamond):
        comparison = compare_oracles(diamond, OracleKind.GRAPHIC)
        assert comparison.agree
        assert [i.generic_length for i in comparison.iterations] == [3, 3, None]
        assert comparison.specialized_objective == 2

    def test_cographic_agrees_on_chain(self, chain_coflow):
        comparison = compare_oracles(chain_coflow, OracleKind.COGRAPHIC)
        assert comparison.agree
        assert comparison.generic_objective == 5

    def test_generic_against_itself_rejected(self, diamond):
        with pytest.raises(OracleMismatchError):
            compare_oracles(diamond, OracleKind.GENERIC)
