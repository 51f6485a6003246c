"""Digraphs as regular spaces: incidence matrices, flows and coflows

Orientation convention, fixed project-wide: arc (u, v) contributes -1 in
the row of its tail u and +1 in the row of its head v.
"""

from fractions import Fraction
from typing import Dict, Mapping, Sequence, Tuple

from ..linalg import solve
from ..models.instance import GraphMetadata, Instance
from ..models.matrix import TUMatrix
from ..models.modes import SpaceMode
from ..models.trace import FlowState
from ..utils.exceptions import InputValidationError, OracleMismatchError
from .regular_space import build_space


def incidence_matrix(
    vertices: Sequence[int], arcs: Sequence[Tuple[int, int]]
) -> TUMatrix:
    """Vertex-arc incidence matrix with tail -1 / head +1"""
    row_of = {vertex: i for i, vertex in enumerate(vertices)}
    if len(row_of) != len(vertices):
        raise InputValidationError("vertex labels must be distinct")
    rows = [[0] * len(arcs) for _ in vertices]
    for j, (tail, head) in enumerate(arcs):
        if tail not in row_of or head not in row_of:
            raise InputValidationError(
                f"arc {j + 1} ({tail}, {head}) has a dangling endpoint", {"arc": j + 1}
            )
        if tail == head:
            raise InputValidationError(
                f"arc {j + 1} ({tail}, {head}) is a self-loop", {"arc": j + 1}
            )
        rows[row_of[tail]][j] = -1
        rows[row_of[head]][j] = 1
    return TUMatrix(entries=rows)


def build_graph_instance(
    vertices: Sequence[int],
    arcs: Sequence[Tuple[int, int]],
    source: int,
    sink: int,
    capacities: Sequence,
    mode: SpaceMode = SpaceMode.KERNEL,
) -> Instance:
    """Instance for the arcs plus an appended return arc r = (sink, source)

    capacities[j] belongs to arcs[j]; the return arc is uncapacitated.
    """
    if len(capacities) != len(arcs):
        raise InputValidationError(
            f"{len(capacities)} capacities given for {len(arcs)} arcs"
        )
    all_arcs = tuple(tuple(arc) for arc in arcs) + ((sink, source),)
    graph = GraphMetadata(
        vertices=tuple(vertices), arcs=all_arcs, source=source, sink=sink
    )
    space = build_space(incidence_matrix(graph.vertices, graph.arcs), mode)
    return Instance(
        space=space,
        r=graph.return_arc,
        capacities={j: capacity for j, capacity in enumerate(capacities)},
        graph=graph,
    )


def check_graph_metadata(instance: Instance, graph: GraphMetadata, mode: SpaceMode) -> None:
    """The instance must be the declared mode over exactly this digraph"""
    if instance.mode != mode:
        raise OracleMismatchError(
            f"oracle needs a {mode.value} instance, got {instance.mode.value}",
            {"mode": instance.mode.value},
        )
    if incidence_matrix(graph.vertices, graph.arcs) != instance.space.generator:
        raise OracleMismatchError("graph metadata does not match the generator matrix")
    if instance.r != graph.return_arc:
        raise OracleMismatchError(
            f"r = {instance.r + 1} is not the return arc {graph.return_arc + 1}"
        )


def vertex_potentials(flow: FlowState, graph: GraphMetadata) -> Dict[int, Fraction]:
    """Potentials pi with f_j = pi(head) - pi(tail), zero on one vertex per component"""
    matrix = incidence_matrix(graph.vertices, graph.arcs).to_rational().transpose()
    potentials = solve(matrix, flow.values)
    if potentials is None:
        raise InputValidationError("flow is not a coflow of this graph")
    return {vertex: potentials[i] for i, vertex in enumerate(graph.vertices)}


def arc_slack(
    flow: FlowState, capacities: Mapping[int, Fraction], j: int
) -> Tuple[bool, bool]:
    """(forward usable, backward usable) for arc j in the residual graph"""
    return flow[j] < capacities[j], flow[j] > 0
