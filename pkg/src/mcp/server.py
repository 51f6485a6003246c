"""FastMCP server exposing the solver over stdio"""

from fastmcp import FastMCP

from .resources import _register_format_resources
from .tools import _register_solver_tools


def build_mcp_server() -> FastMCP:
    """Create the server and register all tools and resources"""
    mcp: FastMCP = FastMCP("regular-flow")
    _register_solver_tools(mcp)
    _register_format_resources(mcp)
    return mcp
