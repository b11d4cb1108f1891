"""Comparison filters: unconditional 3x3 median and adaptive median.

The standard median filter replaces every pixel, corrupted or not, which
is exactly why it blurs detail as density grows. The adaptive median grows
its window (3, 5, ..., max_window) until the window median stops being an
extreme of the window, then keeps the center when the center itself is not
an extreme, otherwise outputs the median. Both read the input snapshot.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .image import GrayImage

__all__ = ["AmfConfig", "smf", "amf"]


@dataclass(frozen=True)
class AmfConfig:
    """Adaptive-median growth limit; windows are 3, 5, ..., max_window."""

    max_window: int = 39

    def __post_init__(self) -> None:
        if self.max_window < 3 or self.max_window % 2 == 0:
            raise ValueError(f"max_window must be an odd integer >= 3, got {self.max_window}")


def smf(img: GrayImage) -> GrayImage:
    """3x3 median of every pixel, replicate-padded."""
    h, w = img.height, img.width
    wide = np.pad(img.pixels, 1, mode="edge")
    stack = np.stack([wide[dy : dy + h, dx : dx + w] for dy in range(3) for dx in range(3)])
    stack.sort(axis=0)
    return GrayImage(stack[4])


def amf(img: GrayImage, cfg: AmfConfig | None = None) -> GrayImage:
    """Classical two-level adaptive median filter.

    Level A grows the window while the window median equals the window min
    or max; at the first non-extreme median (or at max_window) Level B
    outputs the center if the center is strictly inside (min, max), else
    the median. Pixels are processed independently over the input snapshot;
    undecided pixel sets shrink round by round, so each window size is
    evaluated only where still needed.
    """
    cfg = cfg or AmfConfig()
    h, w = img.height, img.width
    rmax = cfg.max_window // 2
    wide = np.pad(img.pixels, rmax, mode="edge")
    wide_flat = wide.ravel()
    wp = w + 2 * rmax
    flat = img.pixels.ravel()
    out = flat.copy()

    idx = np.arange(h * w, dtype=np.int64)
    ys, xs = np.divmod(idx, w)
    base = (ys + rmax) * wp + (xs + rmax)
    undone = idx
    undone_base = base
    for size in range(3, cfg.max_window + 1, 2):
        r = size // 2
        offs = np.array(
            [dy * wp + dx for dy in range(-r, r + 1) for dx in range(-r, r + 1)],
            dtype=np.int64,
        )
        win = wide_flat[undone_base[:, None] + offs[None, :]]
        zmin = win.min(axis=1)
        zmax = win.max(axis=1)
        mid = (size * size) // 2
        zmed = np.partition(win, mid, axis=1)[:, mid]
        done = (zmed > zmin) & (zmed < zmax)
        if size == cfg.max_window:
            done[:] = True
        if done.any():
            sel = undone[done]
            centers = flat[sel]
            keep = (centers > zmin[done]) & (centers < zmax[done])
            out[sel] = np.where(keep, centers, zmed[done])
            undone = undone[~done]
            undone_base = undone_base[~done]
        if undone.size == 0:
            break
    return GrayImage(out.reshape(h, w))
