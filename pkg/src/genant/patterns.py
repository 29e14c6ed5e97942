"""Seed patterns and the plain-text pattern file format.

File grammar::

    # comment
    width height offset_i offset_j
    ant: i j heading          (optional; heading is Up/Right/Down/Left or U/R/D/L)
    background: b             (optional)
    <height rows of width digits, top row = highest j>

``offset`` is the lower-left cell of the pattern, so an 11x11 pattern centred
on the origin has offset (-5, -5).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .core import MAX_STATES, Heading


class PatternError(ValueError):
    """Malformed pattern text. ``line``/``column`` are 1-based when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


@dataclass
class PatternGrid:
    width: int
    height: int
    offset: tuple[int, int] = (0, 0)
    values: list[int] = field(default_factory=list)
    ant: tuple[tuple[int, int], Heading] | None = None
    background: int | None = None

    def __post_init__(self):
        if self.width < 0 or self.height < 0:
            raise ValueError("pattern dimensions must be non-negative")
        if len(self.values) != self.width * self.height:
            raise ValueError(
                f"pattern has {len(self.values)} values, expected {self.width * self.height}"
            )
        self.offset = (int(self.offset[0]), int(self.offset[1]))
        self.values = [int(v) for v in self.values]

    @classmethod
    def empty(cls) -> PatternGrid:
        return cls(0, 0)

    @classmethod
    def centred(cls, width: int, height: int, values) -> PatternGrid:
        return cls(width, height, (-(width // 2), -(height // 2)), list(values))

    def cells(self):
        """Yield ``((i, j), state)`` for every pattern cell."""
        i0, j0 = self.offset
        for r in range(self.height):
            j = j0 + self.height - 1 - r
            row = self.values[r * self.width:(r + 1) * self.width]
            for c, v in enumerate(row):
                yield (i0 + c, j), v

    def max_state(self) -> int:
        return max(self.values, default=0)


_HEADING_NAMES = {
    "up": Heading.UP, "u": Heading.UP, "n": Heading.UP,
    "right": Heading.RIGHT, "r": Heading.RIGHT, "e": Heading.RIGHT,
    "down": Heading.DOWN, "d": Heading.DOWN, "s": Heading.DOWN,
    "left": Heading.LEFT, "l": Heading.LEFT, "w": Heading.LEFT,
}


def parse_heading(text: str) -> Heading:
    try:
        return _HEADING_NAMES[text.strip().lower()]
    except KeyError:
        raise ValueError(f"unknown heading {text!r}") from None


def _ints(tokens, lineno, what):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise PatternError(f"{what} must be integers", lineno) from None


def parse_pattern(text: str, m: int | None = None) -> PatternGrid:
    """Parse pattern text. With ``m`` given, states >= m are rejected."""
    limit = MAX_STATES if m is None else m
    header = None
    ant = None
    background = None
    rows: list[tuple[int, str]] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            tokens = line.split()
            if len(tokens) != 4:
                raise PatternError("header must be 'width height offset_i offset_j'", lineno)
            header = _ints(tokens, lineno, "header fields")
            if header[0] < 0 or header[1] < 0:
                raise PatternError("width and height must be non-negative", lineno)
            continue
        key, sep, rest = line.partition(":")
        if sep and key.strip().lower() == "ant":
            tokens = rest.split()
            if len(tokens) != 3:
                raise PatternError("expected 'ant: i j heading'", lineno)
            i, j = _ints(tokens[:2], lineno, "ant position")
            try:
                ant = ((i, j), parse_heading(tokens[2]))
            except ValueError as exc:
                raise PatternError(str(exc), lineno) from None
            continue
        if sep and key.strip().lower() == "background":
            (background,) = _ints(rest.split()[:1] or ["x"], lineno, "background")
            if not 0 <= background < limit:
                raise PatternError(f"background {background} out of range (m={limit})", lineno)
            continue
        rows.append((lineno, line))

    if header is None:
        raise PatternError("missing header line")
    width, height, oi, oj = header
    if len(rows) != height:
        raise PatternError(f"expected {height} rows, found {len(rows)}")

    values: list[int] = []
    for lineno, row in rows:
        if len(row) != width:
            raise PatternError(f"expected {width} cells, found {len(row)}", lineno)
        for col, ch in enumerate(row, start=1):
            if not ch.isdigit():
                raise PatternError(f"non-digit cell {ch!r}", lineno, col)
            v = int(ch)
            if v >= limit:
                raise PatternError(f"state {v} out of range (m={limit})", lineno, col)
            values.append(v)
    return PatternGrid(width, height, (oi, oj), values, ant, background)


def serialize_pattern(pattern: PatternGrid) -> str:
    if pattern.max_state() > 9:
        raise ValueError("pattern files hold single-digit states only")
    lines = [f"{pattern.width} {pattern.height} {pattern.offset[0]} {pattern.offset[1]}"]
    if pattern.ant is not None:
        (i, j), h = pattern.ant
        lines.append(f"ant: {i} {j} {h.label}")
    if pattern.background is not None:
        lines.append(f"background: {pattern.background}")
    w = pattern.width
    for r in range(pattern.height):
        lines.append("".join(str(v) for v in pattern.values[r * w:(r + 1) * w]))
    return "\n".join(lines) + "\n"


def load_pattern(path: str | Path, m: int | None = None) -> PatternGrid:
    return parse_pattern(Path(path).read_text(encoding="utf-8"), m)
