"""Format detection for instance inputs"""

from pathlib import Path
from typing import Optional, Tuple

from ..models.instance import GraphMetadata, Instance
from ..models.modes import SpaceMode
from ..utils.exceptions import InputValidationError
from .dimacs import parse_dimacs_digraph
from .instance_file import content_lines, parse_instance

FORMATS = ("auto", "instance", "dimacs")


def detect_format(text: str) -> str:
    """'dimacs' when the first content line is a DIMACS 'c' or 'p' line"""
    for _, tokens in content_lines(text):
        return "dimacs" if tokens[0] in ("c", "p") else "instance"
    return "instance"


def load_instance_text(
    text: str, fmt: str = "auto", mode: Optional[SpaceMode] = None
) -> Tuple[Instance, Optional[GraphMetadata]]:
    """Parse either format; mode applies to DIMACS input only"""
    if fmt not in FORMATS:
        raise InputValidationError(f"unknown input format {fmt!r}")
    if fmt == "auto":
        fmt = detect_format(text)
    if fmt == "dimacs":
        return parse_dimacs_digraph(text, SpaceMode(mode or SpaceMode.KERNEL))
    if mode is not None:
        raise InputValidationError(
            "--mode applies to DIMACS inputs; instance files declare their mode"
        )
    return parse_instance(text), None


def load_instance(
    path: Path, fmt: str = "auto", mode: Optional[SpaceMode] = None
) -> Tuple[Instance, Optional[GraphMetadata]]:
    return load_instance_text(Path(path).read_text(encoding="utf-8"), fmt, mode)
