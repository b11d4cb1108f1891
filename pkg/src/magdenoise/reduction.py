"""Two-stage sorted-median replacement of flagged pixels.

Stage one sorts the center with its four diagonal neighbors and takes the
middle value; stage two sorts the four 4-neighbors together with that
value and takes the middle again. A stage-two median that is itself an
extreme gets replaced by the average of the two order statistics above it
(pepper case) or below it (salt case), rounded half-up.
"""

from __future__ import annotations

from enum import Enum

import numpy as np

from .image import GrayImage, NoiseMask, Window3

__all__ = ["ScanPolicy", "two_stage_median", "reduce"]


class ScanPolicy(str, Enum):
    """Raster-scan semantics for the reduction pass.

    PROGRESSIVE lets already-restored pixels feed the windows of later
    flagged pixels (raster order); SNAPSHOT reads the noisy input only.
    Progressive is the default: at high densities most windows hold no
    clean pixel, and only propagation of restored values rescues them.
    """

    PROGRESSIVE = "progressive"
    SNAPSHOT = "snapshot"


def two_stage_median(win: Window3) -> int:
    """Distance-sorted two-stage median of a 3x3 window."""
    stage1 = sorted((win.center,) + win.diagonals())
    stage2 = sorted(win.cross() + (stage1[2],))
    b3 = stage2[2]
    if 0 < b3 < 255:
        return b3
    if b3 == 0:
        return (stage2[3] + stage2[4] + 1) // 2
    return (stage2[0] + stage2[1] + 1) // 2


def reduce(
    img: GrayImage,
    mask: NoiseMask,
    policy: ScanPolicy | str = ScanPolicy.PROGRESSIVE,
) -> GrayImage:
    """Replace flagged pixels by their two-stage median; copy the rest.

    Under PROGRESSIVE the loop below must stay sequential in raster order;
    the contract is exact equality with the sequential reference. Unflagged
    pixels are byte-identical in the output.
    """
    policy = ScanPolicy(policy)
    if (mask.width, mask.height) != (img.width, img.height):
        raise ValueError(
            f"mask is {mask.width}x{mask.height} but image is {img.width}x{img.height}"
        )
    flagged = np.flatnonzero(mask.flags.ravel())
    if flagged.size == 0:
        return img
    h, w = img.height, img.width
    out = img.pixels.ravel().tolist()
    src = out if policy is ScanPolicy.PROGRESSIVE else list(out)
    last_x = w - 1
    last_y = h - 1
    for idx in flagged.tolist():
        y, x = divmod(idx, w)
        row0 = idx - x
        rm = row0 - w if y > 0 else row0
        rp = row0 + w if y < last_y else row0
        xm = x - 1 if x > 0 else 0
        xp = x + 1 if x < last_x else x
        # stage one: center + diagonals; stage two: 4-neighbors + stage-one median
        a = sorted((src[idx], src[rm + xm], src[rm + xp], src[rp + xm], src[rp + xp]))
        b = sorted((src[rm + x], src[row0 + xm], src[row0 + xp], src[rp + x], a[2]))
        b3 = b[2]
        if 0 < b3 < 255:
            out[idx] = b3
        elif b3 == 0:
            out[idx] = (b[3] + b[4] + 1) // 2
        else:
            out[idx] = (b[0] + b[1] + 1) // 2
    return GrayImage(np.asarray(out, dtype=np.uint8).reshape(h, w))
