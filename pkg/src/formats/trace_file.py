"""Augmentation trace files

    trace ground N r R
    step 1 path +2 +4 epsilon 1 objective 1 length 2
    ...

Indices in a path are 1-based with an explicit sign. Rationals are written
as integers or p/q. Serialization is deterministic, so identical runs give
byte-identical files.
"""

from typing import List

from ..models.paths import RPath
from ..models.trace import AugmentationTrace, TraceStep
from ..models.vectors import SignedVector
from ..utils.exceptions import InputValidationError, InstanceParseError
from .instance_file import content_lines, parse_int, parse_rational


def serialize_trace(trace: AugmentationTrace) -> str:
    lines = [f"trace ground {trace.ground_size} r {trace.r + 1}"]
    for step in trace.steps:
        lines.append(
            f"step {step.iteration} path {step.path.format()} epsilon {step.epsilon} "
            f"objective {step.objective_after} length {step.path_length}"
        )
    return "\n".join(lines) + "\n"


def _field(tokens: List[str], name: str, number: int) -> int:
    try:
        return tokens.index(name)
    except ValueError:
        raise InstanceParseError(f"step line lacks '{name}'", number)


def parse_trace(text: str) -> AugmentationTrace:
    lines = list(content_lines(text))
    if not lines:
        raise InstanceParseError("empty trace file", 1)
    number, header = lines[0]
    if len(header) != 5 or header[0] != "trace" or header[1] != "ground" or header[3] != "r":
        raise InstanceParseError("header reads 'trace ground N r R'", number)
    ground_size = parse_int(header[2], number, "ground size")
    r = parse_int(header[4], number, "r") - 1
    if not 0 <= r < ground_size:
        raise InstanceParseError(f"r = {r + 1} is outside 1..{ground_size}", number)

    trace = AugmentationTrace(ground_size=ground_size, r=r)
    for number, tokens in lines[1:]:
        if tokens[0] != "step" or len(tokens) < 2:
            raise InstanceParseError("expected a 'step' line", number)
        path_at = _field(tokens, "path", number)
        epsilon_at = _field(tokens, "epsilon", number)
        objective_at = _field(tokens, "objective", number)
        length_at = _field(tokens, "length", number)
        if not (1 < path_at < epsilon_at < objective_at < length_at == len(tokens) - 2):
            raise InstanceParseError(
                "step lines read 'step K path ... epsilon E objective F length L'", number
            )
        try:
            path_text = " ".join(tokens[path_at + 1 : epsilon_at])
            vector = SignedVector.parse(path_text, ground_size)
            path = RPath(underlying=vector, r=r)
        except InputValidationError as exc:
            raise InstanceParseError(exc.message, number)
        step = TraceStep(
            iteration=parse_int(tokens[1], number, "iteration"),
            path=path,
            epsilon=parse_rational(tokens[epsilon_at + 1], number, "epsilon"),
            objective_after=parse_rational(tokens[objective_at + 1], number, "objective"),
            path_length=parse_int(tokens[length_at + 1], number, "length"),
        )
        if step.iteration != len(trace.steps) + 1:
            raise InstanceParseError(
                f"step {step.iteration} out of order, expected {len(trace.steps) + 1}", number
            )
        previous = trace.steps[-1].objective_after if trace.steps else 0
        if step.objective_after <= previous:
            raise InstanceParseError(
                f"objective {step.objective_after} does not increase past {previous}", number
            )
        if step.path_length != len(path):
            raise InstanceParseError(
                f"length {step.path_length} does not match the path support {len(path)}",
                number,
            )
        trace.steps.append(step)
    return trace
