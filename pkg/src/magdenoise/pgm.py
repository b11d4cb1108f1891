"""Binary PGM (P5) reading and writing.

Only 8-bit binary PGM is handled: magic ``P5``, whitespace-separated header
tokens with ``#`` comments permitted, maxval 255, then exactly one
whitespace byte before the raw raster. ``write_pgm`` emits the canonical
form ``P5\\n<width> <height>\\n255\\n<raster>`` with no comments, so
``read_pgm(write_pgm(img))`` is bit-exact.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .image import GrayImage

__all__ = ["PgmError", "read_pgm", "write_pgm", "load_pgm", "save_pgm"]

_WS = frozenset(b" \t\n\r\x0b\x0c")
_COMMENT = 0x23  # '#'


class PgmError(ValueError):
    """Malformed or unsupported PGM data."""


def _next_token(data: bytes, pos: int, what: str) -> tuple[bytes, int]:
    n = len(data)
    while pos < n:
        b = data[pos]
        if b in _WS:
            pos += 1
        elif b == _COMMENT:
            while pos < n and data[pos] not in (0x0A, 0x0D):
                pos += 1
        else:
            break
    if pos >= n:
        raise PgmError(f"truncated header: missing {what}")
    start = pos
    while pos < n and data[pos] not in _WS and data[pos] != _COMMENT:
        pos += 1
    return data[start:pos], pos


def _int_token(data: bytes, pos: int, what: str) -> tuple[int, int]:
    token, pos = _next_token(data, pos, what)
    try:
        return int(token), pos
    except ValueError:
        raise PgmError(f"malformed {what} token {token!r}") from None


def read_pgm(data: bytes) -> GrayImage:
    """Parse a binary P5 byte stream into a GrayImage.

    Raises PgmError with a distinct message for each failure mode: wrong
    magic, nonpositive dimensions, unsupported maxval, truncated raster, or
    trailing bytes after the raster.
    """
    data = bytes(data)
    magic, pos = _next_token(data, 0, "magic")
    if magic != b"P5":
        if magic == b"P2":
            raise PgmError("ASCII PGM (P2) is not supported; convert to binary P5")
        raise PgmError(f"bad magic {magic!r}, expected b'P5'")
    width, pos = _int_token(data, pos, "width")
    height, pos = _int_token(data, pos, "height")
    maxval, pos = _int_token(data, pos, "maxval")
    if width <= 0 or height <= 0:
        raise PgmError(f"nonpositive dimensions {width}x{height}")
    if maxval != 255:
        raise PgmError(f"unsupported maxval {maxval} (only 8-bit maxval 255)")
    if pos >= len(data) or data[pos] not in _WS:
        raise PgmError("missing whitespace byte between header and raster")
    pos += 1
    raster = data[pos:]
    expected = width * height
    if len(raster) < expected:
        raise PgmError(f"truncated raster: expected {expected} bytes, got {len(raster)}")
    if len(raster) > expected:
        raise PgmError(f"{len(raster) - expected} trailing bytes after raster")
    px = np.frombuffer(raster, dtype=np.uint8).reshape(height, width)
    return GrayImage(px)


def write_pgm(img: GrayImage) -> bytes:
    """Serialize to canonical binary P5; deterministic per image."""
    header = f"P5\n{img.width} {img.height}\n255\n".encode("ascii")
    return header + img.pixels.tobytes()


def load_pgm(path: str | Path) -> GrayImage:
    return read_pgm(Path(path).read_bytes())


def save_pgm(path: str | Path, img: GrayImage) -> None:
    Path(path).write_bytes(write_pgm(img))
