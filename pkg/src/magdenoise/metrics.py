"""Restoration quality metrics and the benchmark report row.

MSE accumulates squared differences in 64-bit integers, so it is exact up
to the final division. Identical images yield MSE 0 and infinite PSNR; the
infinity is a first-class value rendered as ``inf`` in CSV output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .image import GrayImage, NoiseMask

__all__ = [
    "mse",
    "psnr",
    "detector_score",
    "MetricsReport",
    "CSV_HEADER",
    "reports_to_csv",
]

_PEAK = 255.0


def _check_dims(a, b, kind: str) -> None:
    if (a.width, a.height) != (b.width, b.height):
        raise ValueError(
            f"{kind} dimensions differ: {a.width}x{a.height} vs {b.width}x{b.height}"
        )


def mse(a: GrayImage, b: GrayImage) -> float:
    """Mean squared pixel difference over all W*H pixels."""
    _check_dims(a, b, "image")
    diff = a.pixels.astype(np.int64) - b.pixels.astype(np.int64)
    total = int(np.sum(diff * diff, dtype=np.int64))
    return total / (a.width * a.height)


def psnr(a: GrayImage, b: GrayImage) -> float:
    """Peak signal-to-noise ratio in dB; ``inf`` when the images are equal."""
    m = mse(a, b)
    if m == 0.0:
        return math.inf
    return 10.0 * math.log10(_PEAK * _PEAK / m)


def detector_score(predicted: NoiseMask, truth: NoiseMask) -> tuple[float, float]:
    """(precision, recall) of a predicted mask against ground truth.

    Empty denominators score 1.0: predicting nothing is vacuously precise,
    and there is nothing to miss in an empty truth mask.
    """
    _check_dims(predicted, truth, "mask")
    p = predicted.flags
    t = truth.flags
    tp = int((p & t).sum())
    fp = int((p & ~t).sum())
    fn = int((~p & t).sum())
    precision = tp / (tp + fp) if tp + fp else 1.0
    recall = tp / (tp + fn) if tp + fn else 1.0
    return precision, recall


@dataclass(frozen=True)
class MetricsReport:
    """One benchmark row: filter label, injected density, scores.

    ``precision``/``recall`` are present only when ground truth was known
    and the filter ran a detector; otherwise they serialize as empty cells.
    """

    filter_name: str
    density: float
    mse: float
    psnr_db: float
    precision: float | None = None
    recall: float | None = None


CSV_HEADER = "filter,density,mse,psnr_db,precision,recall"


def _fmt_db(value: float) -> str:
    return "inf" if math.isinf(value) else f"{value:.4f}"


def _fmt_opt(value: float | None) -> str:
    return "" if value is None else f"{value:.6f}"


def _csv_row(r: MetricsReport) -> str:
    return (
        f"{r.filter_name},{r.density:g},{r.mse:.4f},{_fmt_db(r.psnr_db)},"
        f"{_fmt_opt(r.precision)},{_fmt_opt(r.recall)}"
    )


def reports_to_csv(reports: Iterable[MetricsReport]) -> str:
    """Serialize rows under the fixed header; deterministic per input."""
    lines = [CSV_HEADER]
    lines.extend(_csv_row(r) for r in reports)
    return "\n".join(lines) + "\n"
