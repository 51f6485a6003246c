"""Ford-Fulkerson with shortest augmenting paths over a regular space"""

import logging
from fractions import Fraction
from typing import List, Optional, Sequence

from ..linalg.rational import as_vector
from ..models.instance import GraphMetadata, Instance
from ..models.modes import OracleKind, SolveStatus, SpaceMode
from ..models.paths import RPath
from ..models.trace import (
    AugmentationTrace,
    FlowState,
    IterationComparison,
    MaxFlowResult,
    OracleComparison,
    TraceStep,
    TraceSummary,
)
from ..utils.exceptions import (
    DimensionMismatchError,
    InvariantViolationError,
    IterationGuardError,
    OracleMismatchError,
)
from .oracles import (
    AugmentingPathOracle,
    GenericOracle,
    GraphicOracle,
    build_oracle,
    is_augmenting,
    max_step,
)
from .path_algebra import are_conformal
from .settings import get_settings

logger = logging.getLogger(__name__)


def is_feasible(flow: Sequence, instance: Instance) -> bool:
    """Membership in the space and 0 <= f_j <= c_j off r"""
    values = as_vector(flow.values if isinstance(flow, FlowState) else flow)
    if len(values) != instance.ground_size:
        raise DimensionMismatchError(
            f"flow of dimension {len(values)} for a ground set of size {instance.ground_size}"
        )
    if not instance.space.contains(values):
        return False
    return all(0 <= values[j] <= instance.capacity(j) for j in instance.constrained_indices())


class FordFulkersonSolver:
    """Augments from the zero flow along shortest paths with maximal steps"""

    def __init__(
        self,
        instance: Instance,
        oracle: OracleKind = OracleKind.GENERIC,
        check_invariants: Optional[bool] = None,
        allow_large: bool = False,
    ):
        self.instance = instance
        self.oracle: AugmentingPathOracle = build_oracle(
            instance, oracle, override=allow_large
        )
        self.check_invariants = (
            get_settings().check_invariants if check_invariants is None else check_invariants
        )
        self.guard = instance.ground_size**2

    def _check_step(
        self, previous: FlowState, flow: FlowState, path: RPath, trace: AugmentationTrace
    ) -> None:
        instance = self.instance
        if not is_feasible(flow, instance):
            raise InvariantViolationError(
                f"augmentation along {path.format()} left the feasible region",
                {"path": path.format()},
            )
        if not flow[instance.r] > previous[instance.r]:
            raise InvariantViolationError("objective did not increase")
        if trace.steps and len(path) < trace.steps[-1].path_length:
            raise InvariantViolationError(
                f"shortest path length dropped from {trace.steps[-1].path_length} to {len(path)}",
                {"iteration": len(trace.steps) + 1},
            )
        tight = any(
            flow[j] == 0 or flow[j] == instance.capacity(j)
            for j in path.indices
            if j != instance.r
        )
        if not tight:
            raise InvariantViolationError(
                f"maximal step along {path.format()} made no index tight"
            )

    def solve(self) -> MaxFlowResult:
        instance = self.instance
        flow = FlowState.zero(instance.ground_size)
        trace = AugmentationTrace(ground_size=instance.ground_size, r=instance.r)

        while True:
            path = self.oracle.shortest_path(flow)
            if path is None:
                break
            if len(trace.steps) >= self.guard:
                raise IterationGuardError(
                    f"more than |E|^2 = {self.guard} augmentations",
                    {"guard": self.guard, "oracle": self.oracle.kind.value},
                )
            epsilon = max_step(path, flow, instance)
            if epsilon is None:
                logger.info("objective unbounded along %s", path.format())
                return MaxFlowResult(
                    status=SolveStatus.UNBOUNDED,
                    oracle=self.oracle.kind,
                    flow=flow,
                    trace=trace,
                    unbounded_path=path,
                )
            augmented = flow.augmented(path, epsilon)
            if self.check_invariants:
                self._check_step(flow, augmented, path, trace)
            flow = augmented
            trace.steps.append(
                TraceStep(
                    iteration=len(trace.steps) + 1,
                    path=path,
                    epsilon=epsilon,
                    objective_after=flow[instance.r],
                    path_length=len(path),
                )
            )
            logger.debug(
                "iteration %d: path %s, epsilon %s, objective %s",
                len(trace.steps),
                path.format(),
                epsilon,
                flow[instance.r],
            )

        logger.info(
            "optimal objective %s after %d augmentations (%s oracle)",
            flow[instance.r],
            len(trace.steps),
            self.oracle.kind.value,
        )
        return MaxFlowResult(
            status=SolveStatus.OPTIMAL, oracle=self.oracle.kind, flow=flow, trace=trace
        )


def max_flow(
    instance: Instance,
    oracle: OracleKind = OracleKind.GENERIC,
    check_invariants: Optional[bool] = None,
    allow_large: bool = False,
) -> MaxFlowResult:
    """Run the shortest augmenting path method from the zero flow"""
    return FordFulkersonSolver(instance, oracle, check_invariants, allow_large).solve()


def shortest_augmenting_paths(flow: FlowState, instance: Instance) -> List[RPath]:
    """All augmenting r-paths of minimum length for the flow"""
    return GenericOracle(instance).shortest_paths(flow)


def verify_optimality(flow: FlowState, instance: Instance) -> bool:
    """Certified optimal iff no r-path augments the flow"""
    return GenericOracle(instance).shortest_path(flow) is None


def analyze_trace(trace: AugmentationTrace, instance: Instance) -> TraceSummary:
    """Measure a trace against the |E|^2 and (graphic) |V|*|E| bounds"""
    n = instance.ground_size
    graph = instance.graph
    vertex_arc_bound = None
    if graph is not None and instance.mode == SpaceMode.KERNEL:
        vertex_arc_bound = len(graph.vertices) * n

    # runs are counted in augmentations, so a single step is a run of one
    nonconformal = 0
    run = longest_run = min(len(trace.steps), 1)
    for previous, current in zip(trace.steps, trace.steps[1:]):
        if are_conformal(previous.path, current.path):
            run += 1
            longest_run = max(longest_run, run)
        else:
            nonconformal += 1
            run = 1

    lengths = trace.lengths
    augmentations = len(trace.steps)
    within = augmentations <= n * n and (
        vertex_arc_bound is None or augmentations <= vertex_arc_bound
    )
    return TraceSummary(
        augmentations=augmentations,
        squared_ground_bound=n * n,
        vertex_arc_bound=vertex_arc_bound,
        nonconformal_augmentations=nonconformal,
        longest_conformal_run=longest_run,
        length_levels=sorted(set(lengths)),
        lengths_nondecreasing=all(a <= b for a, b in zip(lengths, lengths[1:])),
        within_bounds=within,
    )


def compare_oracles(
    instance: Instance, specialized: OracleKind, allow_large: bool = False
) -> OracleComparison:
    """Query the generic and a specialized oracle on the same flows

    The flow follows the generic oracle's choices; at every iteration both
    oracles report the length of their shortest augmenting path. The final
    objectives come from two independent runs.
    """
    specialized = OracleKind(specialized)
    if specialized == OracleKind.GENERIC:
        raise OracleMismatchError("compare the generic oracle against graphic or cographic")
    generic = GenericOracle(instance)
    other = build_oracle(instance, specialized, override=allow_large)

    iterations: List[IterationComparison] = []
    flow = FlowState.zero(instance.ground_size)
    guard = instance.ground_size**2
    while len(iterations) <= guard:
        path = generic.shortest_path(flow)
        rival = other.shortest_path(flow)
        iterations.append(
            IterationComparison(
                iteration=len(iterations) + 1,
                generic_length=len(path) if path is not None else None,
                specialized_length=len(rival) if rival is not None else None,
            )
        )
        if path is None:
            break
        epsilon = max_step(path, flow, instance)
        if epsilon is None:
            break
        flow = flow.augmented(path, epsilon)

    generic_result = max_flow(instance, OracleKind.GENERIC)
    specialized_result = max_flow(instance, specialized, allow_large=allow_large)
    return OracleComparison(
        specialized=specialized,
        iterations=iterations,
        generic_objective=generic_result.objective,
        specialized_objective=specialized_result.objective,
    )


def min_cut_certificate(
    flow: FlowState, instance: Instance, graph: Optional[GraphMetadata] = None
) -> List[int]:
    """Saturated arcs leaving the residual-reachable set of s (0-based indices)

    For an optimal flow their capacities sum to the objective.
    """
    oracle = GraphicOracle(instance, graph)
    reachable = oracle.reachable_from_source(flow)
    if oracle.graph.sink in reachable:
        raise InvariantViolationError("the sink is reachable: flow is not maximum")
    return [
        j
        for j, (tail, head) in enumerate(oracle.graph.arcs)
        if j != instance.r and tail in reachable and head not in reachable
    ]


def cut_capacity(cut: Sequence[int], instance: Instance) -> Fraction:
    return sum((instance.capacity(j) for j in cut), Fraction(0))


__all__ = [
    "FordFulkersonSolver",
    "is_feasible",
    "is_augmenting",
    "max_step",
    "max_flow",
    "shortest_augmenting_paths",
    "verify_optimality",
    "analyze_trace",
    "compare_oracles",
    "min_cut_certificate",
    "cut_capacity",
]
