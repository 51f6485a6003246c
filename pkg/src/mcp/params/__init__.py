"""Parameter classes for MCP tools"""

from .solver import *  # noqa: F403
