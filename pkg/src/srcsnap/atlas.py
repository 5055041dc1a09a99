"""Embedded monospace glyph atlas for deterministic text rasterization.

Glyphs are authored as 5x7 ink masks inside a 6x8 cell (one blank column
and row of spacing baked in) and scaled to the configured cell size with a
fixed nearest-neighbor mapping, so the same configuration always yields the
same pixels on every platform. Code points without a glyph render as a
hollow box so foreign characters stay visible.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

ATLAS_ID = "mono5x7-v1"

_GLYPH_COLS = 5
_GLYPH_ROWS = 7
_CELL_COLS = 6  # native cell: glyph box plus 1px gap right
_CELL_ROWS = 8  # ... and 1px gap below

_FALLBACK = (
    "XXXXX",
    "X...X",
    "X...X",
    "X...X",
    "X...X",
    "X...X",
    "XXXXX",
)

_GLYPHS: dict[str, tuple[str, ...]] = {
    " ": (
        ".....",
        ".....",
        ".....",
        ".....",
        ".....",
        ".....",
        ".....",
    ),
    "!": (
        "..X..",
        "..X..",
        "..X..",
        "..X..",
        "..X..",
        ".....",
        "..X..",
    ),
    '"': (
        ".X.X.",
        ".X.X.",
        ".X.X.",
        ".....",
        ".....",
        ".....",
        ".....",
    ),
    "#": (
        ".X.X.",
        ".X.X.",
        "XXXXX",
        ".X.X.",
        "XXXXX",
        ".X.X.",
        ".X.X.",
    ),
    "$": (
        "..X..",
        ".XXXX",
        "X.X..",
        ".XXX.",
        "..X.X",
        "XXXX.",
        "..X..",
    ),
    "%": (
        "XX...",
        "XX..X",
        "...X.",
        "..X..",
        ".X...",
        "X..XX",
        "...XX",
    ),
    "&": (
        ".XX..",
        "X..X.",
        "X.X..",
        ".X...",
        "X.X.X",
        "X..X.",
        ".XX.X",
    ),
    "'": (
        "..X..",
        "..X..",
        ".....",
        ".....",
        ".....",
        ".....",
        ".....",
    ),
    "(": (
        "...X.",
        "..X..",
        ".X...",
        ".X...",
        ".X...",
        "..X..",
        "...X.",
    ),
    ")": (
        ".X...",
        "..X..",
        "...X.",
        "...X.",
        "...X.",
        "..X..",
        ".X...",
    ),
    "*": (
        ".....",
        "..X..",
        "X.X.X",
        ".XXX.",
        "X.X.X",
        "..X..",
        ".....",
    ),
    "+": (
        ".....",
        "..X..",
        "..X..",
        "XXXXX",
        "..X..",
        "..X..",
        ".....",
    ),
    ",": (
        ".....",
        ".....",
        ".....",
        ".....",
        "..XX.",
        "..X..",
        ".X...",
    ),
    "-": (
        ".....",
        ".....",
        ".....",
        "XXXXX",
        ".....",
        ".....",
        ".....",
    ),
    ".": (
        ".....",
        ".....",
        ".....",
        ".....",
        ".....",
        "..XX.",
        "..XX.",
    ),
    "/": (
        "....X",
        "....X",
        "...X.",
        "..X..",
        ".X...",
        "X....",
        "X....",
    ),
    "0": (
        ".XXX.",
        "X...X",
        "X..XX",
        "X.X.X",
        "XX..X",
        "X...X",
        ".XXX.",
    ),
    "1": (
        "..X..",
        ".XX..",
        "..X..",
        "..X..",
        "..X..",
        "..X..",
        ".XXX.",
    ),
    "2": (
        ".XXX.",
        "X...X",
        "....X",
        "...X.",
        "..X..",
        ".X...",
        "XXXXX",
    ),
    "3": (
        "XXXXX",
        "...X.",
        "..X..",
        "...X.",
        "....X",
        "X...X",
        ".XXX.",
    ),
    "4": (
        "...X.",
        "..XX.",
        ".X.X.",
        "X..X.",
        "XXXXX",
        "...X.",
        "...X.",
    ),
    "5": (
        "XXXXX",
        "X....",
        "XXXX.",
        "....X",
        "....X",
        "X...X",
        ".XXX.",
    ),
    "6": (
        "..XX.",
        ".X...",
        "X....",
        "XXXX.",
        "X...X",
        "X...X",
        ".XXX.",
    ),
    "7": (
        "XXXXX",
        "....X",
        "...X.",
        "..X..",
        ".X...",
        ".X...",
        ".X...",
    ),
    "8": (
        ".XXX.",
        "X...X",
        "X...X",
        ".XXX.",
        "X...X",
        "X...X",
        ".XXX.",
    ),
    "9": (
        ".XXX.",
        "X...X",
        "X...X",
        ".XXXX",
        "....X",
        "...X.",
        ".XX..",
    ),
    ":": (
        ".....",
        "..XX.",
        "..XX.",
        ".....",
        "..XX.",
        "..XX.",
        ".....",
    ),
    ";": (
        ".....",
        "..XX.",
        "..XX.",
        ".....",
        "..XX.",
        "..X..",
        ".X...",
    ),
    "<": (
        "...X.",
        "..X..",
        ".X...",
        "X....",
        ".X...",
        "..X..",
        "...X.",
    ),
    "=": (
        ".....",
        ".....",
        "XXXXX",
        ".....",
        "XXXXX",
        ".....",
        ".....",
    ),
    ">": (
        ".X...",
        "..X..",
        "...X.",
        "....X",
        "...X.",
        "..X..",
        ".X...",
    ),
    "?": (
        ".XXX.",
        "X...X",
        "....X",
        "...X.",
        "..X..",
        ".....",
        "..X..",
    ),
    "@": (
        ".XXX.",
        "X...X",
        "....X",
        ".XX.X",
        "X.X.X",
        "X.X.X",
        ".XXX.",
    ),
    "A": (
        ".XXX.",
        "X...X",
        "X...X",
        "XXXXX",
        "X...X",
        "X...X",
        "X...X",
    ),
    "B": (
        "XXXX.",
        "X...X",
        "X...X",
        "XXXX.",
        "X...X",
        "X...X",
        "XXXX.",
    ),
    "C": (
        ".XXX.",
        "X...X",
        "X....",
        "X....",
        "X....",
        "X...X",
        ".XXX.",
    ),
    "D": (
        "XXXX.",
        "X...X",
        "X...X",
        "X...X",
        "X...X",
        "X...X",
        "XXXX.",
    ),
    "E": (
        "XXXXX",
        "X....",
        "X....",
        "XXXX.",
        "X....",
        "X....",
        "XXXXX",
    ),
    "F": (
        "XXXXX",
        "X....",
        "X....",
        "XXXX.",
        "X....",
        "X....",
        "X....",
    ),
    "G": (
        ".XXX.",
        "X...X",
        "X....",
        "X.XXX",
        "X...X",
        "X...X",
        ".XXXX",
    ),
    "H": (
        "X...X",
        "X...X",
        "X...X",
        "XXXXX",
        "X...X",
        "X...X",
        "X...X",
    ),
    "I": (
        ".XXX.",
        "..X..",
        "..X..",
        "..X..",
        "..X..",
        "..X..",
        ".XXX.",
    ),
    "J": (
        "..XXX",
        "...X.",
        "...X.",
        "...X.",
        "...X.",
        "X..X.",
        ".XX..",
    ),
    "K": (
        "X...X",
        "X..X.",
        "X.X..",
        "XX...",
        "X.X..",
        "X..X.",
        "X...X",
    ),
    "L": (
        "X....",
        "X....",
        "X....",
        "X....",
        "X....",
        "X....",
        "XXXXX",
    ),
    "M": (
        "X...X",
        "XX.XX",
        "X.X.X",
        "X.X.X",
        "X...X",
        "X...X",
        "X...X",
    ),
    "N": (
        "X...X",
        "XX..X",
        "X.X.X",
        "X..XX",
        "X...X",
        "X...X",
        "X...X",
    ),
    "O": (
        ".XXX.",
        "X...X",
        "X...X",
        "X...X",
        "X...X",
        "X...X",
        ".XXX.",
    ),
    "P": (
        "XXXX.",
        "X...X",
        "X...X",
        "XXXX.",
        "X....",
        "X....",
        "X....",
    ),
    "Q": (
        ".XXX.",
        "X...X",
        "X...X",
        "X...X",
        "X.X.X",
        "X..X.",
        ".XX.X",
    ),
    "R": (
        "XXXX.",
        "X...X",
        "X...X",
        "XXXX.",
        "X.X..",
        "X..X.",
        "X...X",
    ),
    "S": (
        ".XXXX",
        "X....",
        "X....",
        ".XXX.",
        "....X",
        "....X",
        "XXXX.",
    ),
    "T": (
        "XXXXX",
        "..X..",
        "..X..",
        "..X..",
        "..X..",
        "..X..",
        "..X..",
    ),
    "U": (
        "X...X",
        "X...X",
        "X...X",
        "X...X",
        "X...X",
        "X...X",
        ".XXX.",
    ),
    "V": (
        "X...X",
        "X...X",
        "X...X",
        "X...X",
        "X...X",
        ".X.X.",
        "..X..",
    ),
    "W": (
        "X...X",
        "X...X",
        "X...X",
        "X.X.X",
        "X.X.X",
        "XX.XX",
        "X...X",
    ),
    "X": (
        "X...X",
        "X...X",
        ".X.X.",
        "..X..",
        ".X.X.",
        "X...X",
        "X...X",
    ),
    "Y": (
        "X...X",
        "X...X",
        ".X.X.",
        "..X..",
        "..X..",
        "..X..",
        "..X..",
    ),
    "Z": (
        "XXXXX",
        "....X",
        "...X.",
        "..X..",
        ".X...",
        "X....",
        "XXXXX",
    ),
    "[": (
        ".XXX.",
        ".X...",
        ".X...",
        ".X...",
        ".X...",
        ".X...",
        ".XXX.",
    ),
    "\\": (
        "X....",
        "X....",
        ".X...",
        "..X..",
        "...X.",
        "....X",
        "....X",
    ),
    "]": (
        ".XXX.",
        "...X.",
        "...X.",
        "...X.",
        "...X.",
        "...X.",
        ".XXX.",
    ),
    "^": (
        "..X..",
        ".X.X.",
        "X...X",
        ".....",
        ".....",
        ".....",
        ".....",
    ),
    "_": (
        ".....",
        ".....",
        ".....",
        ".....",
        ".....",
        ".....",
        "XXXXX",
    ),
    "`": (
        ".X...",
        "..X..",
        ".....",
        ".....",
        ".....",
        ".....",
        ".....",
    ),
    "a": (
        ".....",
        ".....",
        ".XXX.",
        "....X",
        ".XXXX",
        "X...X",
        ".XXXX",
    ),
    "b": (
        "X....",
        "X....",
        "XXXX.",
        "X...X",
        "X...X",
        "X...X",
        "XXXX.",
    ),
    "c": (
        ".....",
        ".....",
        ".XXXX",
        "X....",
        "X....",
        "X....",
        ".XXXX",
    ),
    "d": (
        "....X",
        "....X",
        ".XXXX",
        "X...X",
        "X...X",
        "X...X",
        ".XXXX",
    ),
    "e": (
        ".....",
        ".....",
        ".XXX.",
        "X...X",
        "XXXXX",
        "X....",
        ".XXXX",
    ),
    "f": (
        "..XX.",
        ".X...",
        "XXXX.",
        ".X...",
        ".X...",
        ".X...",
        ".X...",
    ),
    "g": (
        ".....",
        ".XXXX",
        "X...X",
        "X...X",
        ".XXXX",
        "....X",
        ".XXX.",
    ),
    "h": (
        "X....",
        "X....",
        "XXXX.",
        "X...X",
        "X...X",
        "X...X",
        "X...X",
    ),
    "i": (
        "..X..",
        ".....",
        ".XX..",
        "..X..",
        "..X..",
        "..X..",
        ".XXX.",
    ),
    "j": (
        "...X.",
        ".....",
        "..XX.",
        "...X.",
        "...X.",
        "X..X.",
        ".XX..",
    ),
    "k": (
        "X....",
        "X....",
        "X..X.",
        "X.X..",
        "XX...",
        "X.X..",
        "X..X.",
    ),
    "l": (
        ".XX..",
        "..X..",
        "..X..",
        "..X..",
        "..X..",
        "..X..",
        ".XXX.",
    ),
    "m": (
        ".....",
        ".....",
        "XX.X.",
        "X.X.X",
        "X.X.X",
        "X.X.X",
        "X...X",
    ),
    "n": (
        ".....",
        ".....",
        "XXXX.",
        "X...X",
        "X...X",
        "X...X",
        "X...X",
    ),
    "o": (
        ".....",
        ".....",
        ".XXX.",
        "X...X",
        "X...X",
        "X...X",
        ".XXX.",
    ),
    "p": (
        ".....",
        "XXXX.",
        "X...X",
        "X...X",
        "XXXX.",
        "X....",
        "X....",
    ),
    "q": (
        ".....",
        ".XXXX",
        "X...X",
        "X...X",
        ".XXXX",
        "....X",
        "....X",
    ),
    "r": (
        ".....",
        ".....",
        "X.XX.",
        "XX..X",
        "X....",
        "X....",
        "X....",
    ),
    "s": (
        ".....",
        ".....",
        ".XXXX",
        "X....",
        ".XXX.",
        "....X",
        "XXXX.",
    ),
    "t": (
        ".X...",
        ".X...",
        "XXXX.",
        ".X...",
        ".X...",
        ".X..X",
        "..XX.",
    ),
    "u": (
        ".....",
        ".....",
        "X...X",
        "X...X",
        "X...X",
        "X...X",
        ".XXXX",
    ),
    "v": (
        ".....",
        ".....",
        "X...X",
        "X...X",
        "X...X",
        ".X.X.",
        "..X..",
    ),
    "w": (
        ".....",
        ".....",
        "X...X",
        "X...X",
        "X.X.X",
        "X.X.X",
        ".X.X.",
    ),
    "x": (
        ".....",
        ".....",
        "X...X",
        ".X.X.",
        "..X..",
        ".X.X.",
        "X...X",
    ),
    "y": (
        ".....",
        "X...X",
        "X...X",
        ".XXXX",
        "....X",
        "...X.",
        ".XX..",
    ),
    "z": (
        ".....",
        ".....",
        "XXXXX",
        "...X.",
        "..X..",
        ".X...",
        "XXXXX",
    ),
    "{": (
        "...XX",
        "..X..",
        "..X..",
        ".X...",
        "..X..",
        "..X..",
        "...XX",
    ),
    "|": (
        "..X..",
        "..X..",
        "..X..",
        "..X..",
        "..X..",
        "..X..",
        "..X..",
    ),
    "}": (
        "XX...",
        "..X..",
        "..X..",
        "...X.",
        "..X..",
        "..X..",
        "XX...",
    ),
    "~": (
        ".....",
        ".....",
        ".X...",
        "X.X.X",
        "...X.",
        ".....",
        ".....",
    ),
}


def _native_mask(rows: tuple[str, ...]) -> np.ndarray:
    mask = np.zeros((_CELL_ROWS, _CELL_COLS), dtype=bool)
    for r, row in enumerate(rows):
        for c, ch in enumerate(row):
            mask[r, c] = ch == "X"
    return mask


class GlyphAtlas:
    """Immutable map from code points to cell-sized boolean ink masks."""

    def __init__(self, cell_width: int, cell_height: int, atlas_id: str = ATLAS_ID):
        if cell_width < 1 or cell_height < 1:
            raise ValueError("cell dimensions must be >= 1")
        self.cell_width = cell_width
        self.cell_height = cell_height
        self.atlas_id = atlas_id
        ys = (np.arange(cell_height) * _CELL_ROWS) // cell_height
        xs = (np.arange(cell_width) * _CELL_COLS) // cell_width
        grid = np.ix_(ys, xs)
        self._masks = {
            ord(ch): _native_mask(rows)[grid] for ch, rows in _GLYPHS.items()
        }
        self.fallback = _native_mask(_FALLBACK)[grid]

    def mask(self, ch: str) -> np.ndarray:
        """Ink mask for a character; unmapped code points get the fallback box."""
        return self._masks.get(ord(ch), self.fallback)

    def has_glyph(self, ch: str) -> bool:
        return ord(ch) in self._masks


@lru_cache(maxsize=None)
def default_atlas(cell_width: int = 10, cell_height: int = 20) -> GlyphAtlas:
    return GlyphAtlas(cell_width, cell_height)
