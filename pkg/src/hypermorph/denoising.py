"""Denoising experiments: noise injection, error metric, median
baseline, filter sweeps.

The pixel-flip noise is Bernoulli per pixel (each pixel flips
independently with the requested probability), driven by the
counter-based splitmix64 generator in :mod:`hypermorph.kernels`, so a
(seed, ratio) pair reproduces the same noisy image on any platform.
The achieved flip fraction therefore fluctuates around the requested
ratio with binomial spread; it is logged and easy to recompute as
``mse_percent(clean, noisy) / 100``.

Sweep error is always measured against the clean pre-noise image.
"""

import logging
import time
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .grid import (
    BinaryImage,
    GridKind,
    check_image,
    grid_for_image,
    image_to_subhypergraph,
    subhypergraph_to_image,
)
from .hypergraph import DimensionMismatch
from .morphology import FilterFamily, granulometry_close, granulometry_open

log = logging.getLogger(__name__)

DEFAULT_LAMBDA_MAX = 7
DEFAULT_WINDOWS = (3, 5, 7)

_FAMILY_GRIDS = {
    FilterFamily.HYPERGRAPH_ASF: GridKind.FOUR_UNIFORM_BLOCKS,
    FilterFamily.GRAPH_ASF: GridKind.TWO_UNIFORM_ADJACENCY,
}


@dataclass(frozen=True)
class NoiseSpec:
    """Per-pixel flip probability plus the generator seed."""

    ratio: float
    seed: int = 0

    def __post_init__(self):
        if not 0.0 <= self.ratio <= 1.0:
            raise ValueError("noise ratio must lie in [0, 1]")


def add_salt_pepper(img: BinaryImage, spec: NoiseSpec) -> BinaryImage:
    """Flip each pixel independently with probability ``spec.ratio``."""
    img = check_image(img)
    flips = kernels.bernoulli_flips(img.size, spec.seed & 0xFFFFFFFFFFFFFFFF, spec.ratio)
    noisy = img ^ flips.reshape(img.shape)
    log.info(
        "salt-pepper noise: requested %.4f, achieved %.4f (seed %d)",
        spec.ratio,
        float(flips.mean()),
        spec.seed,
    )
    return noisy


def mse_percent(a: BinaryImage, b: BinaryImage) -> float:
    """Percentage of mismatched pixels (equals MSE% for 0/1 images)."""
    a = check_image(a)
    b = check_image(b)
    if a.shape != b.shape:
        raise DimensionMismatch(f"image shapes differ: {a.shape} vs {b.shape}")
    return 100.0 * float(np.count_nonzero(a != b)) / a.size


def median_filter(img: BinaryImage, window: int) -> BinaryImage:
    """Majority vote over the window x window neighborhood.

    The window must be odd and >= 3 (odd window => odd pixel count =>
    no ties on binary input).  Borders replicate the edge pixel.
    """
    img = check_image(img)
    window = int(window)
    if window < 3 or window % 2 == 0:
        raise ValueError("median window must be an odd integer >= 3")
    return kernels.window_majority(img, window)


def asf_denoise(img: BinaryImage, family: FilterFamily, lam: int) -> BinaryImage:
    """Run the alternating filter at scale ``lam`` on the image's grid."""
    img = check_image(img)
    if family not in _FAMILY_GRIDS:
        raise ValueError(f"ASF denoising expects a graph/hypergraph family, got {family}")
    h = grid_for_image(img, _FAMILY_GRIDS[family])
    x = image_to_subhypergraph(img, h)
    lam = int(lam)
    if lam < 0:
        raise ValueError("filter scale must be non-negative")
    for k in range(1, lam + 1):
        x = granulometry_open(h, granulometry_close(h, x, k), k)
    height, width = img.shape
    return subhypergraph_to_image(x, width, height)


@dataclass(frozen=True)
class SweepEntry:
    scale: int
    mse_percent: float
    wall_ms: float


@dataclass
class SweepReport:
    """Per-scale error record of one filter family.

    For the ASF families the scale column is the filter scale and the
    entries cover 0..lambda_max contiguously; for the median family the
    scale column is the window size.  Wall times measure the
    incremental step that produced each entry.
    """

    family: FilterFamily
    entries: list[SweepEntry] = field(default_factory=list)

    @property
    def best(self) -> SweepEntry:
        if not self.entries:
            raise ValueError("empty sweep report")
        return min(self.entries, key=lambda e: (e.mse_percent, e.scale))

    @property
    def best_scale(self) -> int:
        return self.best.scale

    @property
    def best_mse_percent(self) -> float:
        return self.best.mse_percent

    def to_csv(self) -> str:
        lines = ["family,scale,mse_percent,wall_ms"]
        for e in self.entries:
            lines.append(
                f"{self.family.value},{e.scale},{e.mse_percent:.6f},{e.wall_ms:.3f}"
            )
        b = self.best
        lines.append(f"# best,{self.family.value},{b.scale},{b.mse_percent:.6f}")
        return "\n".join(lines) + "\n"


def run_sweep(
    img: BinaryImage,
    noisy: BinaryImage,
    family: FilterFamily,
    lambda_max: int = DEFAULT_LAMBDA_MAX,
    windows=DEFAULT_WINDOWS,
) -> SweepReport:
    """Evaluate one filter family across its scales against ``img``.

    ASF families sweep scales 0..lambda_max (the scale-0 entry is the
    untouched noisy image); the median family sweeps the given window
    sizes.  The ASF chain is advanced incrementally, which yields the
    same per-scale outputs as independent full runs.
    """
    img = check_image(img)
    noisy = check_image(noisy)
    if img.shape != noisy.shape:
        raise DimensionMismatch(f"image shapes differ: {img.shape} vs {noisy.shape}")

    report = SweepReport(family=family)
    if family is FilterFamily.MEDIAN:
        for k in windows:
            start = time.perf_counter()
            out = median_filter(noisy, k)
            wall = (time.perf_counter() - start) * 1000.0
            report.entries.append(SweepEntry(int(k), mse_percent(img, out), wall))
        return report

    if int(lambda_max) < 0:
        raise ValueError("lambda_max must be non-negative")
    h = grid_for_image(noisy, _FAMILY_GRIDS[family])
    height, width = noisy.shape
    start = time.perf_counter()
    x = image_to_subhypergraph(noisy, h)
    wall = (time.perf_counter() - start) * 1000.0
    report.entries.append(SweepEntry(0, mse_percent(img, noisy), wall))
    for k in range(1, int(lambda_max) + 1):
        start = time.perf_counter()
        x = granulometry_open(h, granulometry_close(h, x, k), k)
        out = subhypergraph_to_image(x, width, height)
        wall = (time.perf_counter() - start) * 1000.0
        report.entries.append(SweepEntry(k, mse_percent(img, out), wall))
    return report


def blob_pattern(width: int, height: int) -> BinaryImage:
    """Deterministic blobby test image used by the benchmarks.

    Thresholded sum of a few fixed plane waves: produces smooth
    foreground regions a couple dozen pixels across, no thin one-pixel
    structures, roughly half foreground.
    """
    y, x = np.mgrid[0:height, 0:width].astype(np.float64)
    f = (
        np.cos(x / 7.3)
        + np.cos(y / 9.1)
        + np.cos((x + 2.0 * y) / 16.7)
        + np.cos((2.0 * x - y) / 13.9)
        + 0.5 * np.cos((x + y) / 5.3)
    )
    return f > 0.25
