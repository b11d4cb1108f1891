"""Shared test utilities: seeded random images, masks, and windows."""

from __future__ import annotations

import numpy as np

from magdenoise import GrayImage, NoiseMask, Window3


def random_image(rng: np.random.Generator, width: int, height: int) -> GrayImage:
    return GrayImage(rng.integers(0, 256, size=(height, width), dtype=np.int64))


def random_mask(rng: np.random.Generator, width: int, height: int, p: float) -> NoiseMask:
    return NoiseMask(rng.random((height, width)) < p)


def random_window(rng: np.random.Generator) -> Window3:
    return Window3.of(rng.integers(0, 256, size=9).tolist())


def random_noisy_window(rng: np.random.Generator, extreme_p: float = 0.4) -> Window3:
    """Window whose values are often exactly 0 or 255, to hit extreme branches."""
    vals = rng.integers(0, 256, size=9)
    hits = rng.random(9) < extreme_p
    extremes = np.where(rng.random(9) < 0.5, 0, 255)
    return Window3.of(np.where(hits, extremes, vals).tolist())
