"""DIMACS-style max-flow digraphs

    c <comment>
    p max N M        one problem line: N vertices labelled 1..N, M arcs
    n X s            source vertex
    n X t            sink vertex
    a U V CAP        arc (U, V) with capacity CAP (integer or p/q)

The return arc r = (t, s) is appended after the M arcs and becomes the last
ground index.
"""

import logging
from fractions import Fraction
from typing import List, Optional, Tuple

from ..models.instance import GraphMetadata, Instance
from ..models.modes import SpaceMode
from ..services.graphs import build_graph_instance
from ..utils.exceptions import InstanceParseError
from .instance_file import content_lines, parse_int, parse_rational

logger = logging.getLogger(__name__)


def parse_dimacs_digraph(
    text: str, mode: SpaceMode = SpaceMode.KERNEL
) -> Tuple[Instance, GraphMetadata]:
    """Instance over the digraph's arcs plus r, with the digraph retained as metadata"""
    problem: Optional[Tuple[int, int]] = None
    source: Optional[int] = None
    sink: Optional[int] = None
    arcs: List[Tuple[int, int]] = []
    capacities: List[Fraction] = []
    last_line = 0

    for number, tokens in content_lines(text):
        last_line = number
        kind = tokens[0]
        if kind == "c":
            continue
        if kind == "p":
            if problem is not None:
                raise InstanceParseError("duplicate problem line", number)
            if len(tokens) != 4 or tokens[1] != "max":
                raise InstanceParseError("problem line reads 'p max N M'", number)
            vertices = parse_int(tokens[2], number, "vertex count")
            arc_count = parse_int(tokens[3], number, "arc count")
            if vertices < 2 or arc_count < 0:
                raise InstanceParseError(
                    "need at least two vertices and a nonnegative arc count", number
                )
            problem = (vertices, arc_count)
            continue
        if problem is None:
            raise InstanceParseError("the problem line must come first", number)
        if kind == "n":
            if len(tokens) != 3 or tokens[2] not in ("s", "t"):
                raise InstanceParseError("node lines read 'n X s' or 'n X t'", number)
            vertex = parse_int(tokens[1], number, "vertex")
            if not 1 <= vertex <= problem[0]:
                raise InstanceParseError(f"vertex {vertex} is outside 1..{problem[0]}", number)
            if tokens[2] == "s":
                if source is not None:
                    raise InstanceParseError("duplicate source line", number)
                source = vertex
            else:
                if sink is not None:
                    raise InstanceParseError("duplicate sink line", number)
                sink = vertex
            continue
        if kind == "a":
            if len(tokens) != 4:
                raise InstanceParseError("arc lines read 'a U V CAP'", number)
            tail = parse_int(tokens[1], number, "arc tail")
            head = parse_int(tokens[2], number, "arc head")
            for vertex in (tail, head):
                if not 1 <= vertex <= problem[0]:
                    raise InstanceParseError(
                        f"arc endpoint {vertex} is not a declared vertex", number
                    )
            if tail == head:
                raise InstanceParseError(f"arc ({tail}, {head}) is a self-loop", number)
            capacity = parse_rational(tokens[3], number, "capacity")
            if capacity < 0:
                raise InstanceParseError(f"capacity {capacity} is negative", number)
            arcs.append((tail, head))
            capacities.append(capacity)
            continue
        raise InstanceParseError(f"unknown line type {kind!r}", number)

    if problem is None:
        raise InstanceParseError("missing problem line", last_line + 1)
    if source is None:
        raise InstanceParseError("missing source line 'n X s'", last_line + 1)
    if sink is None:
        raise InstanceParseError("missing sink line 'n X t'", last_line + 1)
    if source == sink:
        raise InstanceParseError("source and sink must differ", last_line + 1)
    if len(arcs) != problem[1]:
        raise InstanceParseError(
            f"problem line declares {problem[1]} arcs, found {len(arcs)}", last_line + 1
        )

    instance = build_graph_instance(
        vertices=range(1, problem[0] + 1),
        arcs=arcs,
        source=source,
        sink=sink,
        capacities=capacities,
        mode=mode,
    )
    logger.debug(
        "read digraph with %d vertices and %d arcs, return arc %d",
        problem[0],
        len(arcs),
        instance.r + 1,
    )
    return instance, instance.graph


def serialize_dimacs(graph: GraphMetadata, instance: Instance) -> str:
    """DIMACS text for a graph instance; the return arc is left implicit"""
    lines = [
        f"p max {len(graph.vertices)} {len(graph.arcs) - 1}",
        f"n {graph.source} s",
        f"n {graph.sink} t",
    ]
    lines.extend(
        f"a {tail} {head} {instance.capacity(j)}"
        for j, (tail, head) in enumerate(graph.arcs)
        if j != graph.return_arc
    )
    return "\n".join(lines) + "\n"
