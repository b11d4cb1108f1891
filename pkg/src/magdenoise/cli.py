"""Command-line front end: noise injection, denoising, metrics, density sweep.

Each activity gets one verb::

    magdenoise inject  clean.pgm noisy.pgm --density 0.5 --seed 7
    magdenoise denoise noisy.pgm out.pgm --reference clean.pgm
    magdenoise sweep   clean.pgm --csv bench.csv
    magdenoise psnr    clean.pgm out.pgm

``sweep`` writes the CSV report and, unless ``--no-plot`` is given, renders
the PSNR-vs-density figure next to it.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Sequence

import numpy as np

from .baselines import AmfConfig, amf, smf
from .detection import DetectorConfig
from .enhancement import EnhanceConfig, EnhanceMode, std_dev
from .image import GrayImage, NoiseMask
from .metrics import MetricsReport, detector_score, mse, psnr, reports_to_csv
from .noise import NoiseSpec, inject
from .pgm import PgmError, load_pgm, save_pgm
from .pipeline import DenoiseConfig, denoise
from .plotting import render_sweep_plot
from .reduction import ScanPolicy

__all__ = ["main", "run_sweep", "SweepSpec", "FILTER_NAMES", "DEFAULT_DENSITIES"]

FILTER_NAMES = ("proposed", "smf", "amf", "none")
DEFAULT_DENSITIES = tuple(round(0.1 * k, 1) for k in range(1, 10))


@dataclass(frozen=True)
class SweepSpec:
    """Density-sweep parameters: density grid, filter set, base seed.

    Row seeds derive as ``seed + index(density)``, so rows are independent
    yet the whole CSV reproduces from one base seed. All filters at a given
    density share the same corrupted image.
    """

    densities: tuple[float, ...] = DEFAULT_DENSITIES
    filters: tuple[str, ...] = FILTER_NAMES
    seed: int = 1
    salt_fraction: float = 0.5

    def __post_init__(self) -> None:
        if not self.densities:
            raise ValueError("densities must be nonempty")
        for d in self.densities:
            if not 0.0 < d <= 1.0:
                raise ValueError(f"density must be in (0, 1], got {d}")
        for name in self.filters:
            if name not in FILTER_NAMES:
                raise ValueError(f"unknown filter {name!r}, expected one of {FILTER_NAMES}")


def _apply_filter(
    name: str,
    noisy: GrayImage,
    cfg: DenoiseConfig,
    amf_cfg: AmfConfig,
) -> tuple[GrayImage, NoiseMask | None]:
    if name == "proposed":
        return denoise(noisy, cfg)
    if name == "smf":
        return smf(noisy), None
    if name == "amf":
        return amf(noisy, amf_cfg), None
    if name == "none":
        return noisy, None
    raise ValueError(f"unknown filter {name!r}, expected one of {FILTER_NAMES}")


def run_sweep(
    clean: GrayImage,
    spec: SweepSpec,
    cfg: DenoiseConfig | None = None,
    amf_cfg: AmfConfig | None = None,
    echo: Callable[[str], None] | None = None,
) -> list[MetricsReport]:
    """Benchmark every (density, filter) pair against the clean image.

    Rows come back in (density, filter) order as listed in ``spec``;
    ``none`` rows score the raw corrupted image. Proposed rows carry
    detector precision/recall against the injection ground truth.
    """
    cfg = cfg or DenoiseConfig()
    amf_cfg = amf_cfg or AmfConfig()
    reports: list[MetricsReport] = []
    for index, density in enumerate(spec.densities):
        noisy, truth = inject(
            clean,
            NoiseSpec(density=density, salt_fraction=spec.salt_fraction, seed=spec.seed + index),
        )
        if echo is not None:
            sigma = std_dev(noisy)
            gate = cfg.enhance.mode
            applied = gate is EnhanceMode.ON or (
                gate is EnhanceMode.AUTO and sigma > cfg.enhance.sigma_threshold
            )
            echo(
                f"density {density:g} seed {spec.seed + index} sigma {sigma:.4f} "
                f"enhancement {'on' if applied else 'off'}"
            )
        for name in spec.filters:
            out, predicted = _apply_filter(name, noisy, cfg, amf_cfg)
            precision = recall = None
            if predicted is not None:
                precision, recall = detector_score(predicted, truth)
            reports.append(
                MetricsReport(
                    filter_name=name,
                    density=density,
                    mse=mse(clean, out),
                    psnr_db=psnr(clean, out),
                    precision=precision,
                    recall=recall,
                )
            )
    return reports


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def _add_config_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--mag-threshold", type=float, default=40.0,
        help="gradient threshold for the noise detector (default 40)",
    )
    p.add_argument(
        "--sigma-threshold", type=float, default=75.0,
        help="standard-deviation gate for enhancement (default 75)",
    )
    p.add_argument(
        "--enhance", choices=[m.value for m in EnhanceMode], default="auto",
        help="enhancement gate: auto (sigma test), on, or off (default auto)",
    )
    p.add_argument(
        "--scan", choices=[s.value for s in ScanPolicy], default="progressive",
        help="reduction scan order (default progressive)",
    )
    p.add_argument(
        "--max-window", type=int, default=39,
        help="adaptive median growth limit, odd (default 39)",
    )


def _config_from_args(args: argparse.Namespace) -> tuple[DenoiseConfig, AmfConfig]:
    cfg = DenoiseConfig(
        detector=DetectorConfig(mag_threshold=args.mag_threshold),
        scan=ScanPolicy(args.scan),
        enhance=EnhanceConfig(sigma_threshold=args.sigma_threshold, mode=EnhanceMode(args.enhance)),
    )
    return cfg, AmfConfig(max_window=args.max_window)


def _parse_densities(text: str) -> tuple[float, ...]:
    try:
        values = tuple(float(part) for part in text.split(",") if part.strip())
    except ValueError:
        raise ValueError(f"bad density list {text!r}") from None
    return values


def _parse_filters(text: str) -> tuple[str, ...]:
    names = tuple(part.strip() for part in text.split(",") if part.strip())
    return names


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="magdenoise",
        description="Salt-and-pepper noise injection, removal, and benchmarking (binary PGM only).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_inject = sub.add_parser("inject", help="corrupt an image with seeded salt-and-pepper noise")
    p_inject.add_argument("input", help="clean input .pgm")
    p_inject.add_argument("output", help="corrupted output .pgm")
    p_inject.add_argument("--density", type=float, required=True, help="corruption probability p in [0, 1]")
    p_inject.add_argument("--seed", type=int, default=1, help="RNG seed (default 1)")
    p_inject.add_argument(
        "--salt-fraction", type=float, default=0.5,
        help="salt share among corrupted pixels (default 0.5)",
    )
    p_inject.add_argument("--mask-out", help="optional ground-truth mask .pgm (255 = corrupted)")
    p_inject.set_defaults(func=cmd_inject)

    p_denoise = sub.add_parser("denoise", help="restore a corrupted image")
    p_denoise.add_argument("input", help="noisy input .pgm")
    p_denoise.add_argument("output", help="restored output .pgm")
    p_denoise.add_argument(
        "--filter", choices=FILTER_NAMES, default="proposed",
        help="restoration filter (default proposed)",
    )
    p_denoise.add_argument("--reference", help="clean image; prints MSE/PSNR against it")
    _add_config_flags(p_denoise)
    p_denoise.set_defaults(func=cmd_denoise)

    p_sweep = sub.add_parser("sweep", help="density sweep benchmark producing a CSV (and figure)")
    p_sweep.add_argument("input", help="clean input .pgm")
    p_sweep.add_argument("--csv", required=True, help="output CSV path")
    p_sweep.add_argument(
        "--densities", default=",".join(f"{d:g}" for d in DEFAULT_DENSITIES),
        help="comma-separated densities (default 0.1..0.9)",
    )
    p_sweep.add_argument(
        "--filters", default=",".join(FILTER_NAMES),
        help="comma-separated subset of proposed,smf,amf,none",
    )
    p_sweep.add_argument("--seed", type=int, default=1, help="base seed (default 1)")
    p_sweep.add_argument(
        "--salt-fraction", type=float, default=0.5,
        help="salt share among corrupted pixels (default 0.5)",
    )
    p_sweep.add_argument("--plot", help="figure path (default: CSV path with .png suffix)")
    p_sweep.add_argument("--no-plot", action="store_true", help="skip the figure")
    _add_config_flags(p_sweep)
    p_sweep.set_defaults(func=cmd_sweep)

    p_psnr = sub.add_parser("psnr", help="print MSE/PSNR between two images")
    p_psnr.add_argument("a", help="first .pgm")
    p_psnr.add_argument("b", help="second .pgm")
    p_psnr.set_defaults(func=cmd_psnr)

    return parser


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_inject(args: argparse.Namespace) -> int:
    img = load_pgm(args.input)
    spec = NoiseSpec(density=args.density, salt_fraction=args.salt_fraction, seed=args.seed)
    noisy, mask = inject(img, spec)
    save_pgm(args.output, noisy)
    if args.mask_out:
        mask_img = GrayImage(np.where(mask.flags, 255, 0).astype(np.uint8))
        save_pgm(args.mask_out, mask_img)
    print(f"realized corruption fraction: {mask.fraction:.6f}")
    return 0


def cmd_denoise(args: argparse.Namespace) -> int:
    noisy = load_pgm(args.input)
    cfg, amf_cfg = _config_from_args(args)
    out, predicted = _apply_filter(args.filter, noisy, cfg, amf_cfg)
    save_pgm(args.output, out)
    if args.filter == "proposed":
        sigma = std_dev(noisy)
        applied = cfg.enhance.mode is EnhanceMode.ON or (
            cfg.enhance.mode is EnhanceMode.AUTO and sigma > cfg.enhance.sigma_threshold
        )
        print(f"sigma {sigma:.4f} enhancement {'on' if applied else 'off'}")
        if predicted is not None:
            print(f"flagged {predicted.count} of {noisy.width * noisy.height} pixels")
    if args.reference:
        ref = load_pgm(args.reference)
        m = mse(ref, out)
        p = psnr(ref, out)
        print(f"mse {m:.4f}")
        print(f"psnr_db {'inf' if p == float('inf') else f'{p:.4f}'}")
    return 0


def cmd_sweep(args: argparse.Namespace) -> int:
    clean = load_pgm(args.input)
    spec = SweepSpec(
        densities=_parse_densities(args.densities),
        filters=_parse_filters(args.filters),
        seed=args.seed,
        salt_fraction=args.salt_fraction,
    )
    cfg, amf_cfg = _config_from_args(args)
    reports = run_sweep(clean, spec, cfg, amf_cfg, echo=print)
    csv_path = Path(args.csv)
    csv_path.write_text(reports_to_csv(reports), encoding="ascii")
    print(f"wrote {csv_path}")
    if not args.no_plot:
        plot_path = Path(args.plot) if args.plot else csv_path.with_suffix(".png")
        render_sweep_plot(reports, plot_path)
        print(f"wrote {plot_path}")
    return 0


def cmd_psnr(args: argparse.Namespace) -> int:
    a = load_pgm(args.a)
    b = load_pgm(args.b)
    m = mse(a, b)
    p = psnr(a, b)
    print(f"mse {m:.4f}")
    print(f"psnr_db {'inf' if p == float('inf') else f'{p:.4f}'}")
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OSError, PgmError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
