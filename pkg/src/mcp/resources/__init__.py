"""MCP resources for the max-flow solver"""

from .formats import _register_format_resources  # noqa: F401
