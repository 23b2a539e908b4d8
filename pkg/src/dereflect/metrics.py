"""PSNR and single-scale SSIM for [0, 1]-scaled images."""

import math
from dataclasses import dataclass

import numpy as np
from scipy import ndimage

from .image_io import as_image

__all__ = ["psnr", "ssim", "MetricReport"]

# Standard single-scale SSIM constants: 11x11 Gaussian window of std 1.5,
# stabilizers (0.01*peak)^2 and (0.03*peak)^2 with peak = 1.
_WIN_SIZE = 11
_WIN_SIGMA = 1.5
_C1 = 0.01 ** 2
_C2 = 0.03 ** 2


def _check_pair(a, b):
    a = as_image(a)
    b = as_image(b)
    if a.shape != b.shape:
        raise ValueError(f"image shapes differ: {a.shape} vs {b.shape}")
    return a, b


def psnr(a, b, peak=1.0):
    """Peak signal-to-noise ratio in dB; +inf for identical inputs.

    The mean squared error is averaged over all pixels and channels.
    """
    a, b = _check_pair(a, b)
    mse = float(np.mean((a - b) ** 2))
    if mse == 0.0:
        return math.inf
    return 10.0 * math.log10(peak * peak / mse)


def _ssim_window():
    half = _WIN_SIZE // 2
    x = np.arange(-half, half + 1, dtype=np.float64)
    taps = np.exp(-0.5 * (x / _WIN_SIGMA) ** 2)
    return taps / taps.sum()


def _windowed(a, taps, half):
    """Gaussian-weighted window means at fully interior positions."""
    out = ndimage.correlate1d(a, taps, axis=0, mode="reflect")
    out = ndimage.correlate1d(out, taps, axis=1, mode="reflect")
    return out[half:-half, half:-half]


def _ssim_plane(a, b):
    taps = _ssim_window()
    half = _WIN_SIZE // 2
    mu_a = _windowed(a, taps, half)
    mu_b = _windowed(b, taps, half)
    var_a = _windowed(a * a, taps, half) - mu_a * mu_a
    var_b = _windowed(b * b, taps, half) - mu_b * mu_b
    cov = _windowed(a * b, taps, half) - mu_a * mu_b
    num = (2.0 * mu_a * mu_b + _C1) * (2.0 * cov + _C2)
    den = (mu_a ** 2 + mu_b ** 2 + _C1) * (var_a + var_b + _C2)
    return float(np.mean(num / den))


def ssim(a, b):
    """Mean structural similarity over all 11x11 window positions.

    Inputs must share shape and have both spatial dims >= 11; color
    images score each channel separately and average.
    """
    a, b = _check_pair(a, b)
    if a.shape[0] < _WIN_SIZE or a.shape[1] < _WIN_SIZE:
        raise ValueError(
            f"image {a.shape[0]}x{a.shape[1]} smaller than the "
            f"{_WIN_SIZE}x{_WIN_SIZE} window"
        )
    if a.ndim == 2:
        return _ssim_plane(a, b)
    scores = [_ssim_plane(a[:, :, c], b[:, :, c]) for c in range(a.shape[2])]
    return float(np.mean(scores))


@dataclass
class MetricReport:
    """PSNR/SSIM of one image pair, optionally broken down by channel."""

    psnr_db: float
    ssim: float
    per_channel: list | None = None

    @classmethod
    def compute(cls, reference, test, with_channels=False):
        reference, test = _check_pair(reference, test)
        per_channel = None
        if with_channels and reference.ndim == 3:
            per_channel = [
                (psnr(reference[:, :, c], test[:, :, c]),
                 ssim(reference[:, :, c], test[:, :, c]))
                for c in range(reference.shape[2])
            ]
        return cls(psnr_db=psnr(reference, test),
                   ssim=ssim(reference, test),
                   per_channel=per_channel)
