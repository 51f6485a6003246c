"""File format references exposed as MCP resources"""

from ...formats import dimacs, instance_file, trace_file

FORMAT_DOCS = {
    "instance": instance_file.__doc__,
    "dimacs": dimacs.__doc__,
    "trace": trace_file.__doc__,
}


def format_reference(name: str) -> str:
    if name not in FORMAT_DOCS:
        raise ValueError(f"unknown format {name!r}; known: {', '.join(FORMAT_DOCS)}")
    return f"# {name} format\n{FORMAT_DOCS[name]}"


def _register_format_resources(mcp):
    """Register format resources with the MCP instance"""

    @mcp.resource("formats://{name}")
    def format_resource(name: str) -> str:
        """Layout of an instance, DIMACS or trace file"""
        return format_reference(name)
