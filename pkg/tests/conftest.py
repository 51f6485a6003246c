"""Pytest configuration and shared fixtures

Digraph fixtures label vertices 1..k with the source first and the sink last.
Arc indices in comments are 0-based; the return arc r = (t, s) is always the
last index.
"""

from fractions import Fraction

import pytest

from src.models.instance import Instance
from src.models.matrix import TUMatrix
from src.models.modes import SpaceMode
from src.services.graphs import build_graph_instance
from src.services.regular_space import build_space
from src.services.settings import reset_settings

TRIANGLE_FILE = """\
# directed triangle s -> a -> t with the return arc t -> s
mode kernel
dims 3 3
r 3
matrix
-1 0 1
1 -1 0
0 1 -1
capacities
1 1
2 1
"""

NOT_TU_FILE = """\
mode kernel
dims 2 2
r 1
matrix
1 1
-1 1
capacities
2 1
"""

DIAMOND_DIMACS = """\
c diamond: s=1 a=2 b=3 t=4
p max 4 5
n 1 s
n 4 t
a 1 2 1
a 1 3 1
a 2 3 1
a 2 4 1
a 3 4 1
"""

CHAIN_DIMACS = """\
c path 3 -> 2 -> 1 read as a coflow
p max 3 2
n 1 s
n 3 t
a 2 1 2
a 3 2 3
"""


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    """Each test reads settings from a clean environment"""
    for name in (
        "REGFLOW_TU_SIZE_LIMIT",
        "REGFLOW_CIRCUIT_GROUND_LIMIT",
        "REGFLOW_REFERENCE_GROUND_LIMIT",
        "REGFLOW_CUT_VERTEX_LIMIT",
        "REGFLOW_CHECK_INVARIANTS",
        "REGFLOW_DEFAULT_ORACLE",
        "REGFLOW_LOG_LEVEL",
    ):
        monkeypatch.delenv(name, raising=False)
    reset_settings()
    yield
    reset_settings()


@pytest.fixture
def triangle():
    """Arcs sa(0), at(1), r(2); unit capacities"""
    return build_graph_instance(
        vertices=[1, 2, 3], arcs=[(1, 2), (2, 3)], source=1, sink=3, capacities=[1, 1]
    )


@pytest.fixture
def triangle_direct():
    """Arcs sa(0), at(1), st(2), r(3); unit capacities"""
    return build_graph_instance(
        vertices=[1, 2, 3],
        arcs=[(1, 2), (2, 3), (1, 3)],
        source=1,
        sink=3,
        capacities=[1, 1, 1],
    )


DIAMOND_ARCS = [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]


@pytest.fixture
def diamond():
    """Arcs sa(0), sb(1), ab(2), at(3), bt(4), r(5); unit capacities"""
    return build_graph_instance(
        vertices=[1, 2, 3, 4], arcs=DIAMOND_ARCS, source=1, sink=4, capacities=[1] * 5
    )


@pytest.fixture
def diamond_zero():
    return build_graph_instance(
        vertices=[1, 2, 3, 4], arcs=DIAMOND_ARCS, source=1, sink=4, capacities=[0] * 5
    )


@pytest.fixture
def diamond_coflow():
    return build_graph_instance(
        vertices=[1, 2, 3, 4],
        arcs=DIAMOND_ARCS,
        source=1,
        sink=4,
        capacities=[1] * 5,
        mode=SpaceMode.ROWSPACE,
    )


@pytest.fixture
def two_vertex_coflow():
    """Arc e = (s, t) with capacity 1 and r = (t, s), row space mode; optimum 0"""
    return build_graph_instance(
        vertices=[1, 2],
        arcs=[(1, 2)],
        source=1,
        sink=2,
        capacities=[1],
        mode=SpaceMode.ROWSPACE,
    )


@pytest.fixture
def chain_coflow():
    """Arcs (2, 1) cap 2, (3, 2) cap 3, r = (3, 1), row space mode; optimum 5"""
    return build_graph_instance(
        vertices=[1, 2, 3],
        arcs=[(2, 1), (3, 2)],
        source=1,
        sink=3,
        capacities=[2, 3],
        mode=SpaceMode.ROWSPACE,
    )


@pytest.fixture
def bridge_coflow():
    """No arcs besides r, row space mode: the unit vector at r is a coflow"""
    return build_graph_instance(
        vertices=[1, 2], arcs=[], source=1, sink=2, capacities=[], mode=SpaceMode.ROWSPACE
    )


@pytest.fixture
def unbounded_kernel():
    """Kernel of [[0, 1]] with r = 0 contains the unit vector at r"""
    space = build_space(TUMatrix(entries=[[0, 1]]), SpaceMode.KERNEL)
    return Instance(space=space, r=0, capacities={1: Fraction(4)})


@pytest.fixture
def write_file(tmp_path):
    """Write text into tmp_path and return the path"""

    def _write(name: str, text: str):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return _write
