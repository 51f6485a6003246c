"""Parameter models for solver MCP tools"""

from typing import List, Optional

from pydantic import BaseModel, Field

from ...models.modes import OracleKind, SpaceMode


class InstanceParams(BaseModel):
    """An instance given inline as instance-file or DIMACS text"""

    instance_text: str = Field(..., description="Instance file or DIMACS max-flow text")
    format: str = Field(
        default="auto", pattern="^(auto|instance|dimacs)$", description="Input format"
    )
    mode: Optional[SpaceMode] = Field(
        None, description="kernel (flow) or rowspace (coflow); DIMACS input only"
    )
    allow_large: bool = Field(
        default=False, description="Lift the desk-scale size guards"
    )


class SolveParams(InstanceParams):
    """Parameters for solving a max-flow instance"""

    oracle: OracleKind = Field(
        default=OracleKind.GENERIC, description="Shortest augmenting path oracle"
    )
    include_trace: bool = Field(
        default=False, description="Return the augmentation trace as text"
    )


class VerifyTUParams(InstanceParams):
    """Parameters for the total unimodularity check"""

    max_size: Optional[int] = Field(
        None, ge=1, description="Size guard on the smaller matrix dimension"
    )


class DecomposeParams(InstanceParams):
    """Parameters for a conformal decomposition"""

    vector: List[str] = Field(
        ..., min_length=1, description="Components as integers or p/q strings"
    )
