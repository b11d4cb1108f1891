"""Grayscale image primitives: pixel grid, noise mask, and 3x3 windows.

Coordinates are (x, y) with x indexing columns and y indexing rows; pixel
(0, 0) is the top-left corner. Wherever a 3x3 neighborhood reaches past the
image border, coordinates clamp to the nearest edge pixel (replicate
padding), so every pixel has a full window.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, NamedTuple, Sequence

import numpy as np

__all__ = [
    "GrayImage",
    "NoiseMask",
    "Window3",
    "window_at",
    "map_windows",
    "DIAGONAL_INDICES",
    "CROSS_INDICES",
    "CENTER_INDEX",
]

# Window3 value layout (row-major):   0 1 2
#                                     3 4 5
#                                     6 7 8
DIAGONAL_INDICES = (0, 2, 6, 8)
CROSS_INDICES = (1, 3, 5, 7)
CENTER_INDEX = 4


@dataclass(frozen=True, eq=False)
class GrayImage:
    """Immutable 8-bit grayscale image.

    ``pixels`` is a read-only ``(height, width)`` uint8 array; values 0 and
    255 are the pepper/salt extremes of the corruption model.
    """

    pixels: np.ndarray

    def __post_init__(self) -> None:
        px = np.asarray(self.pixels)
        if px.ndim != 2:
            raise ValueError(f"pixels must be a 2-D array, got {px.ndim}-D")
        if px.shape[0] < 1 or px.shape[1] < 1:
            raise ValueError(
                f"image dimensions must be positive, got {px.shape[1]}x{px.shape[0]}"
            )
        if px.dtype != np.uint8:
            if not np.issubdtype(px.dtype, np.integer):
                raise ValueError(f"pixel values must be integers, got dtype {px.dtype}")
            if int(px.min()) < 0 or int(px.max()) > 255:
                raise ValueError("pixel values must lie in [0, 255]")
            px = px.astype(np.uint8)
        else:
            px = px.copy()
        px.setflags(write=False)
        object.__setattr__(self, "pixels", px)

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "GrayImage":
        """Build an image from a list of pixel rows (top row first)."""
        return cls(np.array(rows, dtype=np.int64))

    @classmethod
    def filled(cls, width: int, height: int, value: int) -> "GrayImage":
        """Constant image of the given dimensions."""
        return cls(np.full((height, width), value, dtype=np.int64))

    def at(self, x: int, y: int) -> int:
        if not (0 <= x < self.width and 0 <= y < self.height):
            raise IndexError(f"pixel ({x}, {y}) outside {self.width}x{self.height} image")
        return int(self.pixels[y, x])

    def to_rows(self) -> list[list[int]]:
        return self.pixels.tolist()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GrayImage):
            return NotImplemented
        return np.array_equal(self.pixels, other.pixels)


@dataclass(frozen=True, eq=False)
class NoiseMask:
    """Boolean grid marking noise-candidate pixels; dimensions match the image."""

    flags: np.ndarray

    def __post_init__(self) -> None:
        fl = np.asarray(self.flags)
        if fl.ndim != 2:
            raise ValueError(f"flags must be a 2-D array, got {fl.ndim}-D")
        if fl.shape[0] < 1 or fl.shape[1] < 1:
            raise ValueError(
                f"mask dimensions must be positive, got {fl.shape[1]}x{fl.shape[0]}"
            )
        fl = fl.astype(bool)
        fl.setflags(write=False)
        object.__setattr__(self, "flags", fl)

    @property
    def width(self) -> int:
        return self.flags.shape[1]

    @property
    def height(self) -> int:
        return self.flags.shape[0]

    @property
    def count(self) -> int:
        """Number of flagged pixels."""
        return int(self.flags.sum())

    @property
    def fraction(self) -> float:
        """Flagged share of all pixels."""
        return float(self.flags.mean())

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[bool]]) -> "NoiseMask":
        return cls(np.array(rows, dtype=bool))

    @classmethod
    def blank(cls, width: int, height: int) -> "NoiseMask":
        return cls(np.zeros((height, width), dtype=bool))

    def at(self, x: int, y: int) -> bool:
        if not (0 <= x < self.width and 0 <= y < self.height):
            raise IndexError(f"pixel ({x}, {y}) outside {self.width}x{self.height} mask")
        return bool(self.flags[y, x])

    def to_rows(self) -> list[list[bool]]:
        return self.flags.tolist()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NoiseMask):
            return NotImplemented
        return np.array_equal(self.flags, other.flags)


class Window3(NamedTuple):
    """A 3x3 neighborhood flattened row-major; index 4 is the center pixel."""

    values: tuple[int, ...]

    @property
    def center(self) -> int:
        return self.values[CENTER_INDEX]

    def diagonals(self) -> tuple[int, int, int, int]:
        v = self.values
        return (v[0], v[2], v[6], v[8])

    def cross(self) -> tuple[int, int, int, int]:
        v = self.values
        return (v[1], v[3], v[5], v[7])

    @classmethod
    def of(cls, values: Iterable[int]) -> "Window3":
        vals = tuple(int(v) for v in values)
        if len(vals) != 9:
            raise ValueError(f"a 3x3 window needs 9 values, got {len(vals)}")
        if any(v < 0 or v > 255 for v in vals):
            raise ValueError("window values must lie in [0, 255]")
        return cls(vals)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "Window3":
        return cls.of(v for row in rows for v in row)


def window_at(img: GrayImage, x: int, y: int) -> Window3:
    """3x3 neighborhood of (x, y); out-of-bounds coordinates clamp to the edge."""
    w, h = img.width, img.height
    if not (0 <= x < w and 0 <= y < h):
        raise IndexError(f"coordinate ({x}, {y}) outside {w}x{h} image")
    px = img.pixels
    xm = x - 1 if x > 0 else 0
    xp = x + 1 if x < w - 1 else w - 1
    ym = y - 1 if y > 0 else 0
    yp = y + 1 if y < h - 1 else h - 1
    return Window3(
        (
            int(px[ym, xm]), int(px[ym, x]), int(px[ym, xp]),
            int(px[y, xm]), int(px[y, x]), int(px[y, xp]),
            int(px[yp, xm]), int(px[yp, x]), int(px[yp, xp]),
        )
    )


def map_windows(img: GrayImage, f: Callable[[Window3], int]) -> GrayImage:
    """Apply a per-window pixel transform over the input snapshot.

    Every output pixel is ``f`` of the corresponding window of the *input*
    image; outputs never feed back into later windows, so evaluation order
    is unobservable.
    """
    h, w = img.height, img.width
    out = np.empty((h, w), dtype=np.uint8)
    for y in range(h):
        for x in range(w):
            out[y, x] = f(window_at(img, x, y))
    return GrayImage(out)
