"""Tiled-array ant engine compiled with numba.

Same dynamics as :func:`genant.core.run`, for the long runs the detector and
the experiment harness need. The plane is cut into ``TILE x TILE`` blocks that
are allocated on first visit, so a diagonal highway costs memory proportional
to its length rather than to its bounding box.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from .core import VECTORS, AntConfiguration, GridConfig, Heading, Trace, Trajectory, as_rule

SHIFT = 6
TILE = 1 << SHIFT
MASK = TILE - 1

_DX = np.array([v[0] for v in VECTORS], dtype=np.int64)
_DY = np.array([v[1] for v in VECTORS], dtype=np.int64)


@njit(cache=True)
def _kernel(index, pool, used, left, m, bg, ax, ay, h, steps, trace, xs, ys, t0, ox, oy, dx, dy):
    # Stops early (returns s < steps) when the ant leaves the index or the pool is full.
    rows, cols = index.shape
    s = 0
    while s < steps:
        ti = ax >> SHIFT
        tj = ay >> SHIFT
        if ti < 0 or tj < 0 or ti >= rows or tj >= cols:
            break
        tid = index[ti, tj]
        if tid < 0:
            if used == pool.shape[0]:
                break
            tid = used
            used += 1
            pool[tid, :, :] = bg
            index[ti, tj] = tid
        ci = ax & MASK
        cj = ay & MASK
        k = pool[tid, ci, cj]
        trace[t0 + s] = k
        xs[t0 + s] = ax - ox
        ys[t0 + s] = ay - oy
        if left[k]:
            h = (h + 3) & 3
        else:
            h = (h + 1) & 3
        k += 1
        if k == m:
            k = 0
        pool[tid, ci, cj] = k
        ax += dx[h]
        ay += dy[h]
        s += 1
    return ax, ay, h, used, s


class FastAnt:
    """Mutable simulation state with full trace/trajectory retention."""

    def __init__(self, config: AntConfiguration, capacity: int = 1024):
        self.rule = as_rule(config.rule)
        self.m = self.rule.m
        self.background = config.grid.background
        self._left = np.array([c == "L" for c in self.rule.letters], dtype=np.bool_)

        pts = list(config.grid.cells) + [config.position]
        span = max(max(abs(i), abs(j)) for i, j in pts)
        tiles = 4
        while tiles * TILE < 2 * span + 2 * TILE:
            tiles *= 2
        self.index = np.full((tiles, tiles), -1, dtype=np.int32)
        self.pool = np.empty((16, TILE, TILE), dtype=np.uint8)
        self.used = 0
        self.ox = self.oy = (tiles // 2) * TILE
        for (i, j), v in config.grid.cells.items():
            self._tile(i + self.ox, j + self.oy)[(i + self.ox) & MASK, (j + self.oy) & MASK] = v
        self.ax = config.position[0] + self.ox
        self.ay = config.position[1] + self.oy
        self.heading = int(config.heading)

        capacity = max(capacity, 1)
        self.trace = np.empty(capacity, dtype=np.uint8)
        self.xs = np.empty(capacity, dtype=np.int64)
        self.ys = np.empty(capacity, dtype=np.int64)
        self.t = 0

    @property
    def position(self) -> tuple[int, int]:
        return self.ax - self.ox, self.ay - self.oy

    def _tile(self, a: int, b: int) -> np.ndarray:
        ti, tj = a >> SHIFT, b >> SHIFT
        if self.index[ti, tj] < 0:
            if self.used == len(self.pool):
                self._grow_pool()
            self.pool[self.used] = self.background
            self.index[ti, tj] = self.used
            self.used += 1
        return self.pool[self.index[ti, tj]]

    def _grow_pool(self):
        pool = np.empty((2 * len(self.pool), TILE, TILE), dtype=np.uint8)
        pool[:self.used] = self.pool[:self.used]
        self.pool = pool

    def _grow_index(self):
        rows, cols = self.index.shape
        sr, sc = rows // 2, cols // 2
        index = np.full((2 * rows, 2 * cols), -1, dtype=np.int32)
        index[sr:sr + rows, sc:sc + cols] = self.index
        self.index = index
        self.ox += sr * TILE
        self.oy += sc * TILE
        self.ax += sr * TILE
        self.ay += sc * TILE

    def _grow_record(self, total: int):
        cap = len(self.trace)
        if total <= cap:
            return
        while cap < total:
            cap *= 2
        for name in ("trace", "xs", "ys"):
            old = getattr(self, name)
            new = np.empty(cap, dtype=old.dtype)
            new[:self.t] = old[:self.t]
            setattr(self, name, new)

    def advance(self, steps: int):
        if steps < 0:
            raise ValueError("steps must be >= 0")
        self._grow_record(self.t + steps)
        while steps > 0:
            self.ax, self.ay, self.heading, self.used, done = _kernel(
                self.index, self.pool, self.used, self._left, self.m, self.background,
                self.ax, self.ay, self.heading, steps, self.trace, self.xs, self.ys, self.t,
                self.ox, self.oy, _DX, _DY,
            )
            self.t += done
            steps -= done
            if steps:
                rows, cols = self.index.shape
                if 0 <= self.ax >> SHIFT < rows and 0 <= self.ay >> SHIFT < cols:
                    self._grow_pool()
                else:
                    self._grow_index()

    def recording(self) -> tuple[Trace, Trajectory]:
        trace = Trace(self.trace[:self.t].astype(np.int64))
        traj = Trajectory(np.stack([self.xs[:self.t], self.ys[:self.t]], axis=1))
        return trace, traj

    def to_configuration(self) -> AntConfiguration:
        grid = GridConfig(self.m, self.background)
        for ti, tj in zip(*np.nonzero(self.index >= 0)):
            tile = self.pool[self.index[ti, tj]]
            base_i = int(ti) * TILE - self.ox
            base_j = int(tj) * TILE - self.oy
            for ci, cj in zip(*np.nonzero(tile != self.background)):
                grid.cells[(base_i + int(ci), base_j + int(cj))] = int(tile[ci, cj])
        return AntConfiguration(grid, self.position, Heading(self.heading), self.rule)


def fast_run(config: AntConfiguration, steps: int):
    """Drop-in for :func:`genant.core.run` without windowing."""
    ant = FastAnt(config, capacity=steps)
    ant.advance(steps)
    trace, traj = ant.recording()
    return ant.to_configuration(), trace, traj
