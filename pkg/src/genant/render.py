"""Binary PPM snapshots and plain-text dumps of ant configurations."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import AntConfiguration

Viewport = tuple[int, int, int, int]  # i0, j0, i1, j1 inclusive

_GRAYS_4 = [(255, 255, 255), (192, 192, 192), (96, 96, 96), (0, 0, 0)]


def _default_colors(m: int) -> list[tuple[int, int, int]]:
    if m == 4:
        return list(_GRAYS_4)
    if m > 256:
        raise ValueError("at most 256 distinguishable gray levels")
    levels = np.linspace(255, 0, m).round().astype(int)
    return [(int(g), int(g), int(g)) for g in levels]


@dataclass
class Palette:
    colors: list[tuple[int, int, int]]
    ant: tuple[int, int, int] = (255, 0, 0)
    origin: tuple[int, int, int] = (0, 0, 255)
    outline_origin: bool = False

    def __post_init__(self):
        if len(set(map(tuple, self.colors))) != len(self.colors):
            raise ValueError("palette colors must be distinct per state")

    @classmethod
    def default(cls, m: int, outline_origin: bool = False) -> Palette:
        return cls(_default_colors(m), outline_origin=outline_origin)


def auto_viewport(config: AntConfiguration, pad: int = 2) -> Viewport:
    """Bounding box of non-background cells and the ant, padded by ``pad``.

    A uniform grid gives the 5x5 window centred on the ant.
    """
    ai, aj = config.position
    b = config.grid.bounds
    if b is None:
        return ai - 2, aj - 2, ai + 2, aj + 2
    i0, j0, i1, j1 = b
    return (min(i0, ai) - pad, min(j0, aj) - pad, max(i1, ai) + pad, max(j1, aj) + pad)


def state_window(config: AntConfiguration, viewport: Viewport) -> np.ndarray:
    """States in ``viewport`` as a ``(rows, cols)`` array, top row = highest j."""
    i0, j0, i1, j1 = viewport
    if i1 < i0 or j1 < j0:
        raise ValueError(f"empty viewport {viewport}")
    w, h = i1 - i0 + 1, j1 - j0 + 1
    out = np.full((h, w), config.grid.background, dtype=np.int64)
    for (i, j), v in config.grid.cells.items():
        if i0 <= i <= i1 and j0 <= j <= j1:
            out[j1 - j, i - i0] = v
    return out


def render_bitmap(config: AntConfiguration, viewport: Viewport | None = None, scale: int = 1,
                  palette: Palette | None = None) -> bytes:
    if scale < 1:
        raise ValueError("scale must be >= 1")
    palette = palette or Palette.default(config.grid.m)
    if len(palette.colors) < config.grid.m:
        raise ValueError("palette has fewer colors than cell states")
    viewport = viewport or auto_viewport(config)
    i0, j0, i1, j1 = viewport
    states = state_window(config, viewport)
    lut = np.array(palette.colors, dtype=np.uint8)
    img = lut[states]
    img = np.repeat(np.repeat(img, scale, axis=0), scale, axis=1)

    def cell(i, j):
        r, c = (j1 - j) * scale, (i - i0) * scale
        return slice(r, r + scale), slice(c, c + scale)

    if palette.outline_origin and i0 <= 0 <= i1 and j0 <= 0 <= j1:
        rows, cols = cell(0, 0)
        block = img[rows, cols]
        block[[0, -1], :] = palette.origin
        block[:, [0, -1]] = palette.origin
    ai, aj = config.position
    if i0 <= ai <= i1 and j0 <= aj <= j1:
        rows, cols = cell(ai, aj)
        if scale >= 3:
            img[rows, cols][1:-1, 1:-1] = palette.ant
        else:
            img[rows, cols] = palette.ant

    height, width = img.shape[:2]
    header = f"P6\n{width} {height}\n255\n".encode("ascii")
    return header + img.tobytes()


def dump_text(config: AntConfiguration, viewport: Viewport | None = None) -> str:
    """One character per cell, top row first; the ant's row is followed by
    an annotation line with ``A`` under the ant's column."""
    viewport = viewport or auto_viewport(config)
    i0, j0, i1, j1 = viewport
    states = state_window(config, viewport)
    wide = config.grid.m > 10
    ai, aj = config.position
    lines = []
    for r, row in enumerate(states):
        if wide:
            lines.append(" ".join(f"{v:2d}" for v in row))
        else:
            lines.append("".join(str(v) for v in row))
        if j1 - r == aj and i0 <= ai <= i1:
            col = (ai - i0) * (3 if wide else 1) + (1 if wide else 0)
            lines.append(" " * col + "A")
    return "\n".join(lines) + "\n"
