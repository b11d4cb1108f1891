"""Deterministic synthetic grayscale test scene.

Smooth shading, a few hard-edged disks, and mild texture, with values kept
away from the 0/255 extremes so that injected salt and pepper is always a
genuine outlier. Handy for benchmarking when no photographic input is at
hand:

    python -m magdenoise.phantom out.pgm [size]
"""

from __future__ import annotations

import argparse

import numpy as np

from .image import GrayImage
from .pgm import save_pgm

__all__ = ["make_phantom"]

# (center_x, center_y, radius, brightness shift), in unit coordinates
_DISKS = (
    (0.30, 0.28, 0.14, 48.0),
    (0.72, 0.62, 0.20, -52.0),
    (0.62, 0.21, 0.08, -30.0),
    (0.22, 0.74, 0.11, 36.0),
)


def make_phantom(width: int = 512, height: int = 512) -> GrayImage:
    """Synthetic scene of the given size; same arguments, same pixels."""
    if width < 1 or height < 1:
        raise ValueError(f"dimensions must be positive, got {width}x{height}")
    u = np.linspace(0.0, 1.0, width, dtype=np.float64)[None, :]
    v = np.linspace(0.0, 1.0, height, dtype=np.float64)[:, None]
    two_pi = 2.0 * np.pi

    img = 128.0 + 46.0 * np.sin(two_pi * (1.25 * u + 0.12)) * np.cos(two_pi * (0.85 * v + 0.40))
    img = img + 20.0 * np.sin(two_pi * (2.2 * u + 1.4 * v + 0.07))
    # mild texture so smoothing passes are measurably non-trivial
    img = img + 6.0 * np.sin(two_pi * 13.0 * u) * np.sin(two_pi * 9.0 * v)

    for cx, cy, radius, shift in _DISKS:
        inside = (u - cx) ** 2 + (v - cy) ** 2 <= radius * radius
        img = np.where(inside, img + shift, img)

    img = np.clip(np.rint(img), 16, 240)
    return GrayImage(img.astype(np.int64))


def _main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description="Write a synthetic test scene as PGM.")
    parser.add_argument("output", help="destination .pgm path")
    parser.add_argument("size", nargs="?", type=int, default=512, help="square size (default 512)")
    args = parser.parse_args(argv)
    save_pgm(args.output, make_phantom(args.size, args.size))
    print(f"wrote {args.size}x{args.size} phantom to {args.output}")
    return 0


if __name__ == "__main__":
    raise SystemExit(_main())
