"""MCP tools for the max-flow solver"""

from .solver import _register_solver_tools  # noqa: F401
