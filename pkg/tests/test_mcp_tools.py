"""Tests for the MCP tool functions"""

import pytest
from pydantic import ValidationError

from src.mcp.params.solver import (
    DecomposeParams,
    InstanceParams,
    SolveParams,
    VerifyTUParams,
)
from src.mcp.resources.formats import format_reference
from src.mcp.server import build_mcp_server
from src.mcp.tools.solver import (
    decompose_vector,
    list_circuits,
    reference_objective,
    solve_instance,
    verify_total_unimodularity,
)
from src.models.modes import OracleKind
from src.utils.exceptions import NotInSpaceError, OracleMismatchError
from tests.conftest import CHAIN_DIMACS, DIAMOND_DIMACS, NOT_TU_FILE, TRIANGLE_FILE


class TestSolverTools:
    """Tool functions behind the MCP surface"""

    def test_solve(self):
        result = solve_instance(
            SolveParams(
                instance_text=DIAMOND_DIMACS,
                oracle=OracleKind.GRAPHIC,
                include_trace=True,
            )
        )
        assert result["success"] is True
        assert result["objective"] == "2"
        assert result["return_arc"] == 6
        assert result["summary"]["within_bounds"] is True
        assert result["trace"].startswith("trace ground 6 r 6")

    def test_solve_oracle_mismatch(self):
        params = SolveParams(
            instance_text=CHAIN_DIMACS, mode="rowspace", oracle=OracleKind.GRAPHIC
        )
        with pytest.raises(OracleMismatchError):
            solve_instance(params)

    def test_reference(self):
        params = InstanceParams(instance_text=CHAIN_DIMACS, mode="rowspace")
        result = reference_objective(params)
        assert result == {"success": True, "status": "optimal", "objective": "5"}

    def test_circuits(self):
        result = list_circuits(InstanceParams(instance_text=TRIANGLE_FILE))
        assert result["circuits"] == ["+1 +2 +3"]
        assert result["count"] == 1

    def test_decompose(self):
        result = decompose_vector(
            DecomposeParams(instance_text=TRIANGLE_FILE, vector=["3", "3", "3"])
        )
        assert result["summands"] == [{"vector": "+1 +2 +3", "multiplicity": 3}]

    def test_decompose_non_member(self):
        with pytest.raises(NotInSpaceError):
            decompose_vector(
                DecomposeParams(instance_text=TRIANGLE_FILE, vector=["1", "0", "0"])
            )

    def test_verify_tu(self):
        result = verify_total_unimodularity(VerifyTUParams(instance_text=NOT_TU_FILE))
        assert result["totally_unimodular"] is False
        assert result["violation"] == {"rows": (1, 2), "cols": (1, 2), "determinant": 2}

    def test_params_validate_format(self):
        with pytest.raises(ValidationError):
            InstanceParams(instance_text=TRIANGLE_FILE, format="xml")


class TestServer:
    """Server assembly and resources"""

    def test_build_server(self):
        assert build_mcp_server().name == "regular-flow"

    def test_format_reference(self):
        assert "p max N M" in format_reference("dimacs")
        with pytest.raises(ValueError):
            format_reference("yaml")
