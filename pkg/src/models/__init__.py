from .modes import SpaceMode, OracleKind, SolveStatus
from .matrix import TUMatrix
from .vectors import SignedVector
from .paths import RPath, PathPair, PropertyCheck, PropertyReport, LengthInequality
from .trace import (
    FlowState,
    TraceStep,
    AugmentationTrace,
    MaxFlowResult,
    TraceSummary,
    IterationComparison,
    OracleComparison,
)

__all__ = [
    # Enumerations
    "SpaceMode",
    "OracleKind",
    "SolveStatus",
    # Algebraic models
    "TUMatrix",
    "SignedVector",
    "RPath",
    "PathPair",
    "PropertyCheck",
    "PropertyReport",
    "LengthInequality",
    # Solver models
    "FlowState",
    "TraceStep",
    "AugmentationTrace",
    "MaxFlowResult",
    "TraceSummary",
    "IterationComparison",
    "OracleComparison",
]
