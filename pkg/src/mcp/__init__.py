"""MCP server components for the regular-space max-flow solver"""
