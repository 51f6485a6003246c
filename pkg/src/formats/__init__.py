"""Plain-text instance, DIMACS and trace formats"""

from .dimacs import parse_dimacs_digraph, serialize_dimacs
from .instance_file import InstanceFile, parse_instance, serialize_instance
from .loader import detect_format, load_instance, load_instance_text
from .trace_file import parse_trace, serialize_trace

__all__ = [
    "InstanceFile",
    "parse_instance",
    "serialize_instance",
    "parse_dimacs_digraph",
    "serialize_dimacs",
    "parse_trace",
    "serialize_trace",
    "detect_format",
    "load_instance",
    "load_instance_text",
]
