"""The full three-phase scheme: detect, reduce, conditionally enhance."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import enhancement
from .detection import DetectorConfig, classify
from .enhancement import EnhanceConfig
from .image import GrayImage, NoiseMask
from .reduction import ScanPolicy, reduce

__all__ = ["DenoiseConfig", "denoise"]


@dataclass(frozen=True)
class DenoiseConfig:
    """Per-stage settings for one denoise run."""

    detector: DetectorConfig = field(default_factory=DetectorConfig)
    scan: ScanPolicy = ScanPolicy.PROGRESSIVE
    enhance: EnhanceConfig = field(default_factory=EnhanceConfig)

    def __post_init__(self) -> None:
        object.__setattr__(self, "scan", ScanPolicy(self.scan))


def denoise(noisy: GrayImage, cfg: DenoiseConfig | None = None) -> tuple[GrayImage, NoiseMask]:
    """Run detection, reduction, and gated enhancement on a noisy image.

    Exactly the composition of the three stage calls, single-shot. The
    detector mask is returned so callers can score detection without
    re-running it.
    """
    cfg = cfg or DenoiseConfig()
    mask = classify(noisy, cfg.detector)
    restored = reduce(noisy, mask, cfg.scan)
    return enhancement.enhance(restored, noisy, cfg.enhance), mask
