"""Shortest augmenting path oracles

Three interchangeable strategies behind one interface: the generic oracle
filters the cached r-paths of any regular space, the graphic oracle runs a
breadth-first search in the residual digraph of a flow, and the cographic
oracle enumerates signed cuts of a coflow's digraph.
"""

import itertools
import logging
from abc import ABC, abstractmethod
from fractions import Fraction
from typing import List, Optional

import networkx as nx

from ..models.instance import GraphMetadata, Instance
from ..models.modes import OracleKind, SpaceMode
from ..models.paths import RPath
from ..models.trace import FlowState
from ..models.vectors import SignedVector
from ..utils.exceptions import InputValidationError, OracleMismatchError, SizeGuardError
from .graphs import arc_slack, check_graph_metadata
from .path_algebra import r_paths
from .settings import get_settings

logger = logging.getLogger(__name__)


def is_augmenting(path: RPath, flow: FlowState, instance: Instance) -> bool:
    """True iff f + eps * P stays feasible for some eps > 0"""
    for j, sign in path.support:
        if j == instance.r:
            continue
        if sign > 0 and not flow[j] < instance.capacity(j):
            return False
        if sign < 0 and not flow[j] > 0:
            return False
    return True


def max_step(path: RPath, flow: FlowState, instance: Instance) -> Optional[Fraction]:
    """Largest feasible step along an augmenting path; None when unbounded"""
    if not is_augmenting(path, flow, instance):
        raise InputValidationError(
            f"path {path.format()} is not augmenting for the given flow"
        )
    slacks = [
        instance.capacity(j) - flow[j] if sign > 0 else flow[j]
        for j, sign in path.support
        if j != instance.r
    ]
    return min(slacks) if slacks else None


def _shortest(paths: List[RPath]) -> Optional[RPath]:
    return min(paths, key=RPath.sort_key) if paths else None


class AugmentingPathOracle(ABC):
    """Finds a shortest augmenting r-path for a feasible flow"""

    kind: OracleKind

    def __init__(self, instance: Instance):
        self.instance = instance

    @abstractmethod
    def shortest_path(self, flow: FlowState) -> Optional[RPath]:
        """A shortest augmenting path, or None if the flow is optimal"""


class GenericOracle(AugmentingPathOracle):
    """Scans all circuits through r; works on any regular space"""

    kind = OracleKind.GENERIC

    def __init__(self, instance: Instance):
        super().__init__(instance)
        self._paths = r_paths(instance.space, instance.r)

    def augmenting_paths(self, flow: FlowState) -> List[RPath]:
        return [p for p in self._paths if is_augmenting(p, flow, self.instance)]

    def shortest_paths(self, flow: FlowState) -> List[RPath]:
        """Every augmenting path of minimum length, in tie-break order"""
        candidates = self.augmenting_paths(flow)
        if not candidates:
            return []
        best = min(len(p) for p in candidates)
        return sorted((p for p in candidates if len(p) == best), key=RPath.sort_key)

    def shortest_path(self, flow: FlowState) -> Optional[RPath]:
        return _shortest(self.augmenting_paths(flow))


class GraphicOracle(AugmentingPathOracle):
    """Breadth-first search from s to t in the residual digraph of a flow"""

    kind = OracleKind.GRAPHIC

    def __init__(self, instance: Instance, graph: Optional[GraphMetadata] = None):
        super().__init__(instance)
        self.graph = graph or instance.graph
        if self.graph is None:
            raise OracleMismatchError("the graphic oracle needs digraph metadata")
        check_graph_metadata(instance, self.graph, SpaceMode.KERNEL)

    def residual_graph(self, flow: FlowState) -> nx.MultiDiGraph:
        """Forward arcs below capacity and backward arcs carrying flow, keyed by arc index"""
        residual = nx.MultiDiGraph()
        residual.add_nodes_from(self.graph.vertices)
        for j, (tail, head) in enumerate(self.graph.arcs):
            if j == self.instance.r:
                continue
            forward, backward = arc_slack(flow, self.instance.capacities, j)
            if forward:
                residual.add_edge(tail, head, key=j, sign=1)
            if backward:
                residual.add_edge(head, tail, key=j, sign=-1)
        return residual

    def shortest_path(self, flow: FlowState) -> Optional[RPath]:
        residual = self.residual_graph(flow)
        try:
            walk = nx.shortest_path(residual, self.graph.source, self.graph.sink)
        except nx.NetworkXNoPath:
            return None
        signs = {self.instance.r: 1}
        for u, v in zip(walk, walk[1:]):
            key = min(residual[u][v])
            signs[key] = residual[u][v][key]["sign"]
        vector = SignedVector.from_signs(self.instance.ground_size, signs)
        return RPath(underlying=vector, r=self.instance.r)

    def reachable_from_source(self, flow: FlowState) -> set:
        residual = self.residual_graph(flow)
        return nx.descendants(residual, self.graph.source) | {self.graph.source}


class CographicOracle(AugmentingPathOracle):
    """Smallest augmenting signed cut separating the head of r from its tail"""

    kind = OracleKind.COGRAPHIC

    def __init__(
        self,
        instance: Instance,
        graph: Optional[GraphMetadata] = None,
        vertex_limit: Optional[int] = None,
        override: bool = False,
    ):
        super().__init__(instance)
        self.graph = graph or instance.graph
        if self.graph is None:
            raise OracleMismatchError("the cographic oracle needs digraph metadata")
        check_graph_metadata(instance, self.graph, SpaceMode.ROWSPACE)
        limit = vertex_limit if vertex_limit is not None else get_settings().cut_vertex_limit
        count = len(self.graph.vertices)
        if count > limit and not override:
            raise SizeGuardError(
                f"cut enumeration over {count} vertices exceeds the limit {limit}",
                {"limit": limit, "vertices": count},
            )
        if count > limit:
            logger.warning("enumerating cuts over %d vertices", count)
        self._cuts = self.candidate_cuts()

    def signed_cut(self, side: frozenset) -> SignedVector:
        """+1 on arcs entering side, -1 on arcs leaving it"""
        signs = {}
        for j, (tail, head) in enumerate(self.graph.arcs):
            if head in side and tail not in side:
                signs[j] = 1
            elif tail in side and head not in side:
                signs[j] = -1
        return SignedVector.from_signs(self.instance.ground_size, signs)

    def candidate_cuts(self) -> List[RPath]:
        # r = (t, s) enters every side that holds s but not t
        others = [
            v for v in self.graph.vertices if v not in (self.graph.source, self.graph.sink)
        ]
        cuts = []
        for size in range(len(others) + 1):
            for extra in itertools.combinations(others, size):
                side = frozenset((self.graph.source, *extra))
                cuts.append(RPath(underlying=self.signed_cut(side), r=self.instance.r))
        return cuts

    def shortest_path(self, flow: FlowState) -> Optional[RPath]:
        augmenting = [cut for cut in self._cuts if is_augmenting(cut, flow, self.instance)]
        return _shortest(augmenting)


def build_oracle(
    instance: Instance,
    kind: OracleKind = OracleKind.GENERIC,
    graph: Optional[GraphMetadata] = None,
    override: bool = False,
) -> AugmentingPathOracle:
    """Construct the oracle of the requested kind for an instance

    override lifts the vertex guard of the cographic oracle.
    """
    kind = OracleKind(kind)
    if kind == OracleKind.GENERIC:
        return GenericOracle(instance)
    if kind == OracleKind.GRAPHIC:
        return GraphicOracle(instance, graph)
    return CographicOracle(instance, graph, override=override)


def shortest_augmenting_path_generic(flow: FlowState, instance: Instance) -> Optional[RPath]:
    return GenericOracle(instance).shortest_path(flow)


def shortest_augmenting_path_graphic(
    flow: FlowState, instance: Instance, graph: Optional[GraphMetadata] = None
) -> Optional[RPath]:
    return GraphicOracle(instance, graph).shortest_path(flow)


def shortest_augmenting_path_cographic(
    flow: FlowState,
    instance: Instance,
    graph: Optional[GraphMetadata] = None,
    override: bool = False,
) -> Optional[RPath]:
    return CographicOracle(instance, graph, override=override).shortest_path(flow)
