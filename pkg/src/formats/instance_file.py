"""Line-oriented instance files

    # comments start with '#' and run to the end of the line
    mode kernel            (or rowspace)
    dims R C
    r K                    (1-based)
    matrix
    <R lines of C entries in {-1, 0, 1}>
    capacities
    <C - 1 lines "j value", j 1-based and != K, value an integer or p/q>

Header lines may come in any order but must precede the matrix block.
"""

from fractions import Fraction
from typing import Dict, Iterator, List, Tuple

from pydantic import BaseModel, ConfigDict

from ..models.instance import Instance
from ..models.matrix import TUMatrix
from ..models.modes import SpaceMode
from ..models.rational import Rational, to_fraction
from ..services.regular_space import build_space
from ..utils.exceptions import InputValidationError, InstanceParseError

HEADER_KEYS = ("mode", "dims", "r")


def content_lines(text: str) -> Iterator[Tuple[int, List[str]]]:
    """(1-based line number, tokens) for every non-blank line, comments removed"""
    for number, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if tokens:
            yield number, tokens


def parse_int(token: str, number: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise InstanceParseError(f"{what} must be an integer, got {token!r}", number)


def parse_rational(token: str, number: int, what: str) -> Fraction:
    try:
        return to_fraction(token)
    except ValueError:
        raise InstanceParseError(f"{what} must be an integer or p/q, got {token!r}", number)


class InstanceFile(BaseModel):
    """Parsed contents of an instance file, indices 0-based"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    mode: SpaceMode
    matrix: TUMatrix
    r: int
    capacities: Dict[int, Rational]

    @classmethod
    def from_instance(cls, instance: Instance) -> "InstanceFile":
        return cls(
            mode=instance.mode,
            matrix=instance.space.generator,
            r=instance.r,
            capacities=dict(instance.capacities),
        )

    def to_instance(self) -> Instance:
        space = build_space(self.matrix, self.mode)
        return Instance(space=space, r=self.r, capacities=self.capacities)

    def render(self) -> str:
        lines = [
            f"mode {self.mode.value}",
            f"dims {self.matrix.rows} {self.matrix.cols}",
            f"r {self.r + 1}",
            "matrix",
        ]
        lines.extend(" ".join(str(a) for a in row) for row in self.matrix.entries)
        lines.append("capacities")
        lines.extend(
            f"{j + 1} {self.capacities[j]}" for j in sorted(self.capacities)
        )
        return "\n".join(lines) + "\n"


class _InstanceParser:
    def __init__(self, text: str):
        self.lines = list(content_lines(text))
        self.position = 0
        self.header: Dict[str, Tuple[int, List[str]]] = {}
        self.matrix_line = 0

    def _next(self, expecting: str) -> Tuple[int, List[str]]:
        if self.position >= len(self.lines):
            last = self.lines[-1][0] if self.lines else 0
            raise InstanceParseError(f"unexpected end of file, expected {expecting}", last + 1)
        line = self.lines[self.position]
        self.position += 1
        return line

    def _header(self) -> Tuple[SpaceMode, int, int, int]:
        while True:
            number, tokens = self._next("header or 'matrix'")
            keyword = tokens[0]
            if keyword == "matrix":
                if len(tokens) != 1:
                    raise InstanceParseError("'matrix' takes no arguments", number)
                self.matrix_line = number
                break
            if keyword not in HEADER_KEYS:
                raise InstanceParseError(f"unknown header keyword {keyword!r}", number)
            if keyword in self.header:
                raise InstanceParseError(f"duplicate '{keyword}' line", number)
            self.header[keyword] = (number, tokens[1:])

        for keyword in HEADER_KEYS:
            if keyword not in self.header:
                raise InstanceParseError(
                    f"missing '{keyword}' line before 'matrix'", self.matrix_line
                )

        number, args = self.header["mode"]
        if len(args) != 1 or args[0] not in {m.value for m in SpaceMode}:
            raise InstanceParseError("mode must be 'kernel' or 'rowspace'", number)
        mode = SpaceMode(args[0])

        number, args = self.header["dims"]
        if len(args) != 2:
            raise InstanceParseError("dims takes two integers R C", number)
        rows, cols = (parse_int(token, number, "dimension") for token in args)
        if rows < 1 or cols < 1:
            raise InstanceParseError("dimensions must be positive", number)

        number, args = self.header["r"]
        if len(args) != 1:
            raise InstanceParseError("r takes one index", number)
        r = parse_int(args[0], number, "r")
        if not 1 <= r <= cols:
            raise InstanceParseError(f"r = {r} is outside the ground set 1..{cols}", number)
        return mode, rows, cols, r - 1

    def _matrix(self, rows: int, cols: int) -> TUMatrix:
        entries = []
        for _ in range(rows):
            number, tokens = self._next("a matrix row")
            if tokens[0] == "capacities":
                raise InstanceParseError(
                    f"matrix block has {len(entries)} rows, dims declare {rows}", number
                )
            if len(tokens) != cols:
                raise InstanceParseError(
                    f"matrix row has {len(tokens)} entries, dims declare {cols}", number
                )
            row = [parse_int(token, number, "matrix entry") for token in tokens]
            bad = next((entry for entry in row if entry not in (-1, 0, 1)), None)
            if bad is not None:
                raise InstanceParseError(f"matrix entry {bad} is not in {{-1, 0, 1}}", number)
            entries.append(row)
        return TUMatrix(entries=entries)

    def _capacities(self, cols: int, r: int) -> Dict[int, Fraction]:
        number, tokens = self._next("'capacities'")
        if tokens != ["capacities"]:
            raise InstanceParseError(
                f"expected 'capacities' after the {cols}-column matrix block, "
                f"got {' '.join(tokens)!r}",
                number,
            )
        capacities: Dict[int, Fraction] = {}
        for _ in range(cols - 1):
            number, tokens = self._next("a capacity line")
            if len(tokens) != 2:
                raise InstanceParseError("capacity lines read 'j value'", number)
            j = parse_int(tokens[0], number, "capacity index")
            if not 1 <= j <= cols:
                raise InstanceParseError(f"capacity index {j} is outside 1..{cols}", number)
            if j - 1 == r:
                raise InstanceParseError(f"index {j} is r and carries no capacity", number)
            if j - 1 in capacities:
                raise InstanceParseError(f"duplicate capacity for index {j}", number)
            value = parse_rational(tokens[1], number, "capacity")
            if value < 0:
                raise InstanceParseError(f"capacity of index {j} is negative: {value}", number)
            capacities[j - 1] = value
        if self.position < len(self.lines):
            number, _ = self.lines[self.position]
            raise InstanceParseError(
                f"trailing content after {cols - 1} capacity lines", number
            )
        return capacities

    def parse(self) -> InstanceFile:
        mode, rows, cols, r = self._header()
        matrix = self._matrix(rows, cols)
        capacities = self._capacities(cols, r)
        return InstanceFile(mode=mode, matrix=matrix, r=r, capacities=capacities)


def parse_instance_file(text: str) -> InstanceFile:
    return _InstanceParser(text).parse()


def parse_instance(text: str) -> Instance:
    """Validated Instance from instance-file text"""
    parsed = parse_instance_file(text)
    try:
        return parsed.to_instance()
    except InputValidationError:
        raise
    except ValueError as exc:
        raise InputValidationError(str(exc))


def serialize_instance(instance: Instance) -> str:
    """Instance-file text that parses back to an equal instance"""
    return InstanceFile.from_instance(instance).render()
