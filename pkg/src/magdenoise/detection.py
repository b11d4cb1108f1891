"""Noise-candidate detection from local gradient statistics.

A pixel is flagged only when it sits at a salt/pepper extreme (0 or 255)
AND its mean absolute gradient exceeds the threshold. The second condition
spares genuine flat black or white regions, where the gradient is small.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .image import GrayImage, NoiseMask, Window3

__all__ = ["DetectorConfig", "mag", "classify"]


@dataclass(frozen=True)
class DetectorConfig:
    """Detector tuning; ``mag_threshold`` is in luminance-difference units."""

    mag_threshold: float = 40.0

    def __post_init__(self) -> None:
        if self.mag_threshold < 0:
            raise ValueError(f"mag_threshold must be >= 0, got {self.mag_threshold}")


def mag(win: Window3) -> float:
    """Mean absolute gradient: average of |neighbor - center| over the 8 neighbors."""
    v = win.values
    c = v[4]
    total = (
        abs(v[0] - c) + abs(v[1] - c) + abs(v[2] - c) + abs(v[3] - c)
        + abs(v[5] - c) + abs(v[6] - c) + abs(v[7] - c) + abs(v[8] - c)
    )
    return total / 8.0


# 3x3 offsets into the padded array, center (1, 1) excluded
_NEIGHBOR_OFFSETS = ((0, 0), (0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1), (2, 2))


def classify(img: GrayImage, cfg: DetectorConfig | None = None) -> NoiseMask:
    """Flag extreme-valued pixels whose MAG exceeds the threshold.

    All windows read the input snapshot with replicate padding; the result
    is independent of evaluation order.
    """
    cfg = cfg or DetectorConfig()
    px = img.pixels
    h, w = px.shape
    wide = np.pad(px.astype(np.int32), 1, mode="edge")
    center = wide[1 : h + 1, 1 : w + 1]
    total = np.zeros((h, w), dtype=np.int32)
    for dy, dx in _NEIGHBOR_OFFSETS:
        total += np.abs(wide[dy : dy + h, dx : dx + w] - center)
    extreme = (px == 0) | (px == 255)
    flags = extreme & ((total / 8.0) > cfg.mag_threshold)
    return NoiseMask(flags)
