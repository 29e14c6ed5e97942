"""Generalized Langton's ant on an unbounded sparse grid.

Coordinates: ``i`` grows eastward, ``j`` grows northward, ``Up == (0, 1)``.
A rule word such as ``"LLLR"`` assigns a turn to each cell state; on every
step the ant turns according to the state under it, increments that cell
modulo ``m`` and moves one cell forward.

This module is the reference implementation: plain Python, exact, and slow.
:mod:`genant.engine` runs the same dynamics on a dense array for long runs.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field

import numpy as np

MAX_STATES = 64


class Heading(enum.IntEnum):
    UP = 0
    RIGHT = 1
    DOWN = 2
    LEFT = 3

    @property
    def vector(self) -> tuple[int, int]:
        return VECTORS[self]

    def cw(self) -> Heading:
        return Heading((self + 1) % 4)

    def ccw(self) -> Heading:
        return Heading((self + 3) % 4)

    @property
    def label(self) -> str:
        return self.name.capitalize()


VECTORS = ((0, 1), (1, 0), (0, -1), (-1, 0))


class RuleError(ValueError):
    pass


@dataclass(frozen=True)
class RuleWord:
    letters: str

    def __post_init__(self):
        if len(self.letters) < 2:
            raise RuleError(f"rule word {self.letters!r} must have at least 2 letters")
        if len(self.letters) > MAX_STATES:
            raise RuleError(f"rule word longer than {MAX_STATES} letters")
        for pos, ch in enumerate(self.letters):
            if ch not in "LR":
                raise RuleError(f"bad letter {ch!r} at position {pos} in rule {self.letters!r}")

    @classmethod
    def parse(cls, text: str) -> RuleWord:
        return cls(text.strip().upper())

    @property
    def m(self) -> int:
        return len(self.letters)

    def turns_left(self, state: int) -> bool:
        return self.letters[state] == "L"

    def __str__(self):
        return self.letters


def as_rule(rule: RuleWord | str) -> RuleWord:
    return rule if isinstance(rule, RuleWord) else RuleWord.parse(rule)


class GridConfig:
    """Sparse grid: absent coordinates hold ``background``; stored entries never do."""

    __slots__ = ("cells", "background", "m")

    def __init__(self, m: int, background: int = 0, cells=None):
        if not 0 <= background < m:
            raise ValueError(f"background {background} out of range for m={m}")
        self.m = m
        self.background = background
        self.cells: dict[tuple[int, int], int] = {}
        if cells:
            for key, value in dict(cells).items():
                self[key] = value

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.cells.get(key, self.background)

    def __setitem__(self, key: tuple[int, int], value: int):
        if not 0 <= value < self.m:
            raise ValueError(f"state {value} out of range for m={self.m}")
        if value == self.background:
            self.cells.pop(key, None)
        else:
            self.cells[key] = value

    def __len__(self):
        return len(self.cells)

    def __eq__(self, other):
        if not isinstance(other, GridConfig):
            return NotImplemented
        return (self.m, self.background, self.cells) == (other.m, other.background, other.cells)

    def __repr__(self):
        return f"GridConfig(m={self.m}, background={self.background}, cells={self.cells!r})"

    def copy(self) -> GridConfig:
        g = GridConfig(self.m, self.background)
        g.cells = dict(self.cells)
        return g

    @property
    def bounds(self) -> tuple[int, int, int, int] | None:
        """``(i0, j0, i1, j1)`` inclusive box of non-background cells, or None."""
        if not self.cells:
            return None
        xs = [k[0] for k in self.cells]
        ys = [k[1] for k in self.cells]
        return min(xs), min(ys), max(xs), max(ys)


@dataclass
class AntConfiguration:
    grid: GridConfig
    position: tuple[int, int]
    heading: Heading
    rule: RuleWord

    def __post_init__(self):
        self.rule = as_rule(self.rule)
        self.heading = Heading(self.heading)
        self.position = (int(self.position[0]), int(self.position[1]))
        if self.grid.m != self.rule.m:
            raise ValueError(f"grid modulus {self.grid.m} does not match rule {self.rule}")

    @classmethod
    def uniform(cls, rule, background: int = 0, position=(0, 0), heading=Heading.UP):
        rule = as_rule(rule)
        return cls(GridConfig(rule.m, background), position, heading, rule)

    def copy(self) -> AntConfiguration:
        return AntConfiguration(self.grid.copy(), self.position, self.heading, self.rule)


@dataclass
class Trace:
    """Symbols read by the ant; ``start`` is the time index of ``symbols[0]``."""
    symbols: np.ndarray
    start: int = 0

    def __len__(self):
        return len(self.symbols)

    def __str__(self):
        return "".join(str(int(s)) for s in self.symbols) if self.symbols.max(initial=0) < 10 \
            else " ".join(str(int(s)) for s in self.symbols)


@dataclass
class Trajectory:
    """Ant positions, shape ``(T, 2)``; indexed like :class:`Trace`."""
    positions: np.ndarray = field(default_factory=lambda: np.zeros((0, 2), dtype=np.int64))
    start: int = 0

    def __len__(self):
        return len(self.positions)


def _advance(config: AntConfiguration) -> tuple[int, tuple[int, int]]:
    """Apply one step in place and return ``(symbol read, position before move)``."""
    grid = config.grid
    pos = config.position
    k = grid[pos]
    heading = config.heading.ccw() if config.rule.turns_left(k) else config.heading.cw()
    grid[pos] = (k + 1) % grid.m
    dx, dy = VECTORS[heading]
    config.heading = heading
    config.position = (pos[0] + dx, pos[1] + dy)
    return k, pos


def step(config: AntConfiguration) -> AntConfiguration:
    nxt = config.copy()
    _advance(nxt)
    return nxt


def inverse_step(config: AntConfiguration) -> AntConfiguration:
    prev = config.copy()
    dx, dy = VECTORS[config.heading]
    p = (config.position[0] - dx, config.position[1] - dy)
    k = (prev.grid[p] - 1) % prev.grid.m
    prev.heading = config.heading.cw() if config.rule.turns_left(k) else config.heading.ccw()
    prev.grid[p] = k
    prev.position = p
    return prev


def run(config: AntConfiguration, steps: int, window: int | None = None):
    """Run ``steps`` steps from a copy of ``config``.

    Returns ``(final, trace, trajectory)``. With ``window`` set only the last
    ``window`` symbols/positions are retained.
    """
    if steps < 0:
        raise ValueError("steps must be >= 0")
    cur = config.copy()
    symbols = deque(maxlen=window)
    positions = deque(maxlen=window)
    for _ in range(steps):
        k, pos = _advance(cur)
        symbols.append(k)
        positions.append(pos)
    start = steps - len(symbols)
    trace = Trace(np.array(symbols, dtype=np.int64), start)
    traj = Trajectory(np.array(positions, dtype=np.int64).reshape(-1, 2), start)
    return cur, trace, traj


def rotate_point(p: tuple[int, int], quarter_turns: int) -> tuple[int, int]:
    i, j = p
    for _ in range(quarter_turns % 4):
        i, j = -j, i
    return i, j


def rotate_configuration(config: AntConfiguration, quarter_turns: int) -> AntConfiguration:
    """Rotate grid, position and heading counterclockwise about the origin."""
    q = quarter_turns % 4
    grid = GridConfig(config.grid.m, config.grid.background)
    grid.cells = {rotate_point(k, q): v for k, v in config.grid.cells.items()}
    return AntConfiguration(
        grid, rotate_point(config.position, q), Heading((config.heading - q) % 4), config.rule
    )


def apply_pattern(background: int, pattern, rule) -> AntConfiguration:
    """Uniform ``background`` grid overwritten by ``pattern``.

    The ant starts at the origin heading Up unless the pattern carries a pose.
    """
    rule = as_rule(rule)
    if pattern.max_state() >= rule.m:
        raise ValueError(f"pattern state {pattern.max_state()} out of range for rule {rule}")
    grid = GridConfig(rule.m, background)
    for key, v in pattern.cells():
        grid[key] = v
    if pattern.ant is not None:
        position, heading = pattern.ant
    else:
        position, heading = (0, 0), Heading.UP
    return AntConfiguration(grid, position, heading, rule)
