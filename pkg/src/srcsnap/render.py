"""Deterministic rasterization of text windows into square grayscale images.

The canvas is a fixed grid of character cells (rows x cols) stamped from the
embedded glyph atlas, then resampled to a square with an exact integer box
filter. Every arithmetic step is integral, so identical inputs and
configuration produce identical bytes on any platform.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .atlas import ATLAS_ID, GlyphAtlas, default_atlas
from .image import SnapshotImage
from .png import encode_png
from .reformat import WindowConfig, truncate_window
from .source import SourceText


@dataclass(frozen=True)
class RenderConfig:
    """Geometry and palette for snapshot rendering.

    Defaults give a 1200x600 canvas (120 cols x 10px, 30 rows x 20px)
    resized to 512x512, black ink on a white background.
    """

    rows: int = 30
    cols: int = 120
    cell_width: int = 10
    cell_height: int = 20
    output_size: int = 512
    background: int = 255
    ink: int = 0
    atlas_id: str = ATLAS_ID

    def __post_init__(self) -> None:
        for name in ("rows", "cols", "cell_width", "cell_height", "output_size"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1")
        for name in ("background", "ink"):
            if not 0 <= getattr(self, name) <= 255:
                raise ValueError(f"{name} must be in [0, 255]")
        if self.background == self.ink:
            raise ValueError("background and ink must differ")

    @property
    def canvas_width(self) -> int:
        return self.cols * self.cell_width

    @property
    def canvas_height(self) -> int:
        return self.rows * self.cell_height

    def window(self) -> WindowConfig:
        return WindowConfig(max_rows=self.rows, max_cols=self.cols)


class WindowOverflow(ValueError):
    """Text does not fit the configured row/column grid."""


def render_canvas(
    src: SourceText, cfg: RenderConfig, atlas: GlyphAtlas | None = None
) -> SnapshotImage:
    """Stamp each character into its grid cell on a background canvas.

    Raises WindowOverflow if the text exceeds the grid; callers that want
    silent clipping should truncate first.
    """
    if atlas is None:
        if cfg.atlas_id != ATLAS_ID:
            raise ValueError(f"no embedded atlas named {cfg.atlas_id!r}")
        atlas = default_atlas(cfg.cell_width, cfg.cell_height)
    if atlas.cell_width != cfg.cell_width or atlas.cell_height != cfg.cell_height:
        raise ValueError("atlas cell size does not match render config")
    if atlas.atlas_id != cfg.atlas_id:
        raise ValueError("atlas id does not match render config")
    lines = src.lines()
    if len(lines) > cfg.rows:
        raise WindowOverflow(f"{len(lines)} lines exceed {cfg.rows} rows")
    canvas = np.full(
        (cfg.canvas_height, cfg.canvas_width), cfg.background, dtype=np.uint8
    )
    ch_h, ch_w = cfg.cell_height, cfg.cell_width
    for row, line in enumerate(lines):
        if len(line) > cfg.cols:
            raise WindowOverflow(
                f"line {row + 1} has {len(line)} chars, limit {cfg.cols}"
            )
        y0 = row * ch_h
        for col, ch in enumerate(line):
            if ch == " ":
                continue
            x0 = col * ch_w
            cell = canvas[y0 : y0 + ch_h, x0 : x0 + ch_w]
            cell[atlas.mask(ch)] = cfg.ink
    return SnapshotImage(canvas)


@lru_cache(maxsize=64)
def _axis_plan(n_in: int, n_out: int) -> tuple[np.ndarray, np.ndarray]:
    """Box-filter overlap plan for one axis as (indices, weights).

    Output pixel j covers [j*n_in, (j+1)*n_in) in units of 1/n_out; input
    pixel i covers [i*n_out, (i+1)*n_out). Weight is the integer overlap
    length, zero-padded so every output pixel has the same tap count.
    """
    taps = -((-n_in) // n_out) + 1  # ceil(n_in / n_out) + 1 covers any phase
    idx = np.zeros((n_out, taps), dtype=np.int64)
    wts = np.zeros((n_out, taps), dtype=np.int64)
    for j in range(n_out):
        lo = (j * n_in) // n_out
        hi = -((-(j + 1) * n_in) // n_out)  # ceil division
        for t, i in enumerate(range(lo, hi)):
            ov = min((i + 1) * n_out, (j + 1) * n_in) - max(i * n_out, j * n_in)
            idx[j, t] = i
            wts[j, t] = ov
    return idx, wts


def resize_box(img: SnapshotImage, width: int, height: int) -> SnapshotImage:
    """Exact area-average resize with round-half-up integer arithmetic."""
    px = img.pixels.astype(np.int64)
    h_in, w_in = px.shape
    if (w_in, h_in) != (width, height):
        col_idx, col_w = _axis_plan(w_in, width)
        row_idx, row_w = _axis_plan(h_in, height)
        # Horizontal pass: weighted sums over input columns (division deferred).
        px = (px[:, col_idx] * col_w).sum(axis=2)
        # Vertical pass, then one shared division by the total overlap area.
        num = (px[row_idx] * row_w[:, :, None]).sum(axis=1)
        den = w_in * h_in
        px = (2 * num + den) // (2 * den)
    return SnapshotImage(px.astype(np.uint8))


def resize_to_square(img: SnapshotImage, size: int) -> SnapshotImage:
    return resize_box(img, size, size)


def render_snapshot(
    src: SourceText, cfg: RenderConfig | None = None, atlas: GlyphAtlas | None = None
) -> SnapshotImage:
    """Clip text to the grid, rasterize, and resize to the output square."""
    if cfg is None:
        cfg = RenderConfig()
    clipped = truncate_window(src, cfg.window())
    canvas = render_canvas(clipped, cfg, atlas)
    return resize_to_square(canvas, cfg.output_size)


def snapshot_png(
    src: SourceText, cfg: RenderConfig | None = None, atlas: GlyphAtlas | None = None
) -> bytes:
    return encode_png(render_snapshot(src, cfg, atlas))
