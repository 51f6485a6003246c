"""Solver tools for the MCP surface

Each tool takes its parameter model and returns a JSON-ready dict with a
``success`` flag. Errors propagate to FastMCP, which reports them to the
client.
"""

from typing import Any, Dict, Tuple

from ...formats import load_instance_text, serialize_trace
from ...models.instance import GraphMetadata, Instance
from ...models.modes import SolveStatus
from ...models.rational import to_fraction
from ...services.reference import lp_reference_solve
from ...services.regular_space import (
    conformal_decomposition_grouped,
    enumerate_circuits,
    find_tu_violation,
)
from ...services.solver import analyze_trace, max_flow
from ...utils.exceptions import InputValidationError, UnboundedProblemError
from ..params.solver import DecomposeParams, InstanceParams, SolveParams, VerifyTUParams


def _instance(params: InstanceParams) -> Tuple[Instance, GraphMetadata]:
    instance, graph = load_instance_text(params.instance_text, params.format, params.mode)
    if params.allow_large:
        instance.space.circuits(override=True)
    return instance, graph


def solve_instance(params: SolveParams) -> Dict[str, Any]:
    instance, graph = _instance(params)
    result = max_flow(instance, params.oracle, allow_large=params.allow_large)
    summary = analyze_trace(result.trace, instance)
    response: Dict[str, Any] = {
        "success": True,
        "status": result.status.value,
        "objective": None if result.objective is None else str(result.objective),
        "augmentations": len(result.trace),
        "lengths": result.trace.lengths,
        "summary": summary.model_dump(),
        "flow": [str(value) for value in result.flow.values],
    }
    if result.status == SolveStatus.UNBOUNDED:
        response["unbounded_path"] = result.unbounded_path.format()
    if graph is not None:
        response["return_arc"] = instance.r + 1
    if params.include_trace:
        response["trace"] = serialize_trace(result.trace)
    return response


def reference_objective(params: InstanceParams) -> Dict[str, Any]:
    instance, _ = _instance(params)
    try:
        value = lp_reference_solve(instance, override=params.allow_large)
    except UnboundedProblemError:
        return {"success": True, "status": SolveStatus.UNBOUNDED.value, "objective": None}
    return {"success": True, "status": SolveStatus.OPTIMAL.value, "objective": str(value)}


def list_circuits(params: InstanceParams) -> Dict[str, Any]:
    instance, _ = _instance(params)
    circuits = enumerate_circuits(instance.space, override=params.allow_large)
    return {
        "success": True,
        "circuits": [circuit.format() for circuit in circuits],
        "count": len(circuits),
    }


def decompose_vector(params: DecomposeParams) -> Dict[str, Any]:
    instance, _ = _instance(params)
    try:
        vector = [to_fraction(value) for value in params.vector]
    except ValueError as exc:
        raise InputValidationError(str(exc))
    grouped = conformal_decomposition_grouped(vector, instance.space)
    return {
        "success": True,
        "summands": [
            {"vector": primitive.format(), "multiplicity": multiplicity}
            for primitive, multiplicity in grouped
        ],
    }


def verify_total_unimodularity(params: VerifyTUParams) -> Dict[str, Any]:
    instance, _ = _instance(params)
    violation = find_tu_violation(
        instance.space.generator, params.max_size, override=params.allow_large
    )
    return {
        "success": True,
        "totally_unimodular": violation is None,
        "violation": None if violation is None else violation.model_dump(),
    }


def _register_solver_tools(mcp):
    """Register solver tools with the MCP instance"""

    @mcp.tool()
    def solve(params: SolveParams) -> Dict[str, Any]:
        """Maximize f_r by shortest augmenting paths from the zero flow"""
        return solve_instance(params)

    @mcp.tool()
    def reference(params: InstanceParams) -> Dict[str, Any]:
        """Exact LP optimum of the same instance, for cross-checking"""
        return reference_objective(params)

    @mcp.tool()
    def circuits(params: InstanceParams) -> Dict[str, Any]:
        """All circuits of the space, first nonzero component +1"""
        return list_circuits(params)

    @mcp.tool()
    def decompose(params: DecomposeParams) -> Dict[str, Any]:
        """Conformal decomposition of an integral member into primitive vectors"""
        return decompose_vector(params)

    @mcp.tool()
    def verify_tu(params: VerifyTUParams) -> Dict[str, Any]:
        """Exhaustive determinant check of the generator matrix"""
        return verify_total_unimodularity(params)
