"""Sweep figure rendering: PSNR versus noise density, one line per filter."""

from __future__ import annotations

import math
from pathlib import Path
from typing import Iterable

from .metrics import MetricsReport

__all__ = ["render_sweep_plot"]


def render_sweep_plot(reports: Iterable[MetricsReport], path: str | Path) -> None:
    """Render the benchmark curves to an image file next to the CSV.

    Rows with infinite PSNR (identical images) are left off the plot. The
    matplotlib import stays inside the function so the CSV-only path never
    pays for it.
    """
    import matplotlib

    matplotlib.use("Agg", force=True)
    import matplotlib.pyplot as plt

    by_filter: dict[str, list[tuple[float, float]]] = {}
    for r in reports:
        if math.isfinite(r.psnr_db):
            by_filter.setdefault(r.filter_name, []).append((r.density, r.psnr_db))

    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    for name, points in by_filter.items():
        points.sort()
        ax.plot(
            [d for d, _ in points],
            [p for _, p in points],
            marker="o",
            markersize=4,
            linewidth=1.5,
            label=name,
        )
    ax.set_xlabel("noise density")
    ax.set_ylabel("PSNR (dB)")
    ax.set_title("Restoration quality vs salt-and-pepper density")
    ax.grid(True, alpha=0.3)
    if by_filter:
        ax.legend()
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
