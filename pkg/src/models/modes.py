"""Enumerations shared across the solver"""

from enum import Enum


class SpaceMode(str, Enum):
    """How a generator defines its regular space"""

    KERNEL = "kernel"
    ROWSPACE = "rowspace"


class OracleKind(str, Enum):
    """Shortest augmenting path oracles"""

    GENERIC = "generic"
    GRAPHIC = "graphic"
    COGRAPHIC = "cographic"


class SolveStatus(str, Enum):
    """Outcome of a max-flow run"""

    OPTIMAL = "optimal"
    UNBOUNDED = "unbounded"
