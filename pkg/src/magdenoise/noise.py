"""Seeded salt-and-pepper corruption.

Each pixel is independently overwritten with probability ``density``; an
overwritten pixel becomes salt (255) with probability ``salt_fraction`` and
pepper (0) otherwise. Randomness comes from the splitmix64 stream so runs
reproduce bit-for-bit across platforms and implementations:

    state_k = (seed + (k + 1) * 0x9E3779B97F4A7C15) mod 2**64,  k = 0, 1, ...
    z       = state_k
    z       = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2**64
    z       = ((z ^ (z >> 27)) * 0x94D049BB133111EB) mod 2**64
    out_k   = z ^ (z >> 31)
    u_k     = (out_k >> 11) * 2.0**-53        uniform in [0, 1)

Pixels consume the stream in raster order, two draws each: draw 2*i decides
whether pixel i is overwritten (u < density), draw 2*i + 1 picks salt versus
pepper (u < salt_fraction). Both draws are consumed even for untouched
pixels, so the stream position of every decision is fixed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .image import GrayImage, NoiseMask

__all__ = ["NoiseSpec", "inject", "u01_stream"]

_MASK64 = 0xFFFFFFFFFFFFFFFF
_GAMMA = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)


@dataclass(frozen=True)
class NoiseSpec:
    """Injection parameters: corruption density, salt share, RNG seed."""

    density: float
    salt_fraction: float = 0.5
    seed: int = 0

    def __post_init__(self) -> None:
        if not 0.0 <= self.density <= 1.0:
            raise ValueError(f"density must be in [0, 1], got {self.density}")
        if not 0.0 <= self.salt_fraction <= 1.0:
            raise ValueError(f"salt_fraction must be in [0, 1], got {self.salt_fraction}")


def u01_stream(seed: int, count: int) -> np.ndarray:
    """First ``count`` uniform [0, 1) draws of the splitmix64 stream above."""
    ks = np.arange(1, count + 1, dtype=np.uint64)
    z = np.uint64(seed & _MASK64) + ks * _GAMMA
    z = (z ^ (z >> np.uint64(30))) * _MIX1
    z = (z ^ (z >> np.uint64(27))) * _MIX2
    z ^= z >> np.uint64(31)
    return (z >> np.uint64(11)).astype(np.float64) * 2.0**-53


def inject(img: GrayImage, spec: NoiseSpec) -> tuple[GrayImage, NoiseMask]:
    """Corrupt ``img`` per ``spec``; return the noisy image and ground truth.

    The mask marks exactly the overwritten pixels, even when the injected
    value happens to equal the original. Unmarked pixels stay byte-identical
    to the input. Deterministic in (img, spec).
    """
    h, w = img.height, img.width
    u = u01_stream(spec.seed, 2 * h * w)
    corrupt = u[0::2] < spec.density
    salt = u[1::2] < spec.salt_fraction
    noise_values = np.where(salt, np.uint8(255), np.uint8(0))
    out = np.where(corrupt, noise_values, img.pixels.ravel()).reshape(h, w)
    return GrayImage(out), NoiseMask(corrupt.reshape(h, w))
