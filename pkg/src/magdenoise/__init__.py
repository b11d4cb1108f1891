"""Salt-and-pepper image denoising with a benchmark harness.

The restoration scheme runs in three phases: gradient-based detection of
corrupted pixels, two-stage sorted-median replacement, and a directional
smoothing pass gated on the noisy image's standard deviation. The package
also ships baseline filters (standard and adaptive median), a seeded noise
injector, PSNR/MSE metrics, binary PGM I/O, and a CLI
(``magdenoise inject|denoise|sweep|psnr``).
"""

from .baselines import AmfConfig, amf, smf
from .detection import DetectorConfig, classify, mag
from .enhancement import EnhanceConfig, EnhanceMode, directional_pixel, enhance, std_dev
from .image import GrayImage, NoiseMask, Window3, map_windows, window_at
from .metrics import CSV_HEADER, MetricsReport, detector_score, mse, psnr, reports_to_csv
from .noise import NoiseSpec, inject, u01_stream
from .pgm import PgmError, load_pgm, read_pgm, save_pgm, write_pgm
from .pipeline import DenoiseConfig, denoise
from .reduction import ScanPolicy, reduce, two_stage_median

__version__ = "0.1.0"

__all__ = [
    "AmfConfig",
    "CSV_HEADER",
    "DenoiseConfig",
    "DetectorConfig",
    "EnhanceConfig",
    "EnhanceMode",
    "GrayImage",
    "MetricsReport",
    "NoiseMask",
    "NoiseSpec",
    "PgmError",
    "ScanPolicy",
    "Window3",
    "amf",
    "classify",
    "denoise",
    "detector_score",
    "directional_pixel",
    "enhance",
    "inject",
    "load_pgm",
    "mag",
    "map_windows",
    "mse",
    "psnr",
    "read_pgm",
    "reduce",
    "reports_to_csv",
    "save_pgm",
    "smf",
    "std_dev",
    "two_stage_median",
    "u01_stream",
    "window_at",
    "write_pgm",
]
