"""Synthetic reflection-contaminated images: blur, blend, toy layers.

The contamination model is ``Y = w*T + (1 - w) * blur(R)``: a sharp
transmission layer T mixed with a Gaussian-blurred reflection layer R.
"""

import math

import numpy as np
from scipy import ndimage

from .image_io import as_image

__all__ = [
    "gaussian_kernel",
    "gaussian_blur",
    "blend",
    "make_toy_example",
]


def gaussian_kernel(sigma, radius=None):
    """Normalized 1-D Gaussian taps of std sigma, truncated at radius.

    radius defaults to ceil(3*sigma) and may not be smaller than that
    (the tail mass would make the blur visibly lopsided after
    renormalization).
    """
    if sigma <= 0:
        raise ValueError(f"sigma must be positive, got {sigma}")
    min_radius = math.ceil(3.0 * sigma)
    if radius is None:
        radius = min_radius
    if radius < min_radius:
        raise ValueError(
            f"radius {radius} below ceil(3*sigma) = {min_radius}"
        )
    x = np.arange(-radius, radius + 1, dtype=np.float64)
    taps = np.exp(-0.5 * (x / sigma) ** 2)
    return taps / taps.sum()


def gaussian_blur(img, sigma, radius=None):
    """Separable Gaussian blur with reflective boundary padding.

    The padding matches the mirror-extension convention of the rest of
    the pipeline, so a constant image passes through unchanged and the
    mean intensity is conserved.
    """
    a = as_image(img)
    taps = gaussian_kernel(sigma, radius)
    out = ndimage.convolve1d(a, taps, axis=1, mode="reflect")
    out = ndimage.convolve1d(out, taps, axis=0, mode="reflect")
    return out


def blend(t, r, w, sigma=4.0, radius=None):
    """Blend transmission t with blurred reflection r: w*t + (1-w)*blur(r)."""
    t = as_image(t)
    r = as_image(r)
    if t.shape != r.shape:
        raise ValueError(f"layer shapes differ: {t.shape} vs {r.shape}")
    if not 0.0 <= w <= 1.0:
        raise ValueError(f"blending weight must be in [0, 1], got {w}")
    return w * t + (1.0 - w) * gaussian_blur(r, sigma, radius)


def _smooth_field(rng, shape, feature_scale):
    """Band-limited random field normalized to [0, 1]."""
    noise = rng.standard_normal(shape)
    field = gaussian_blur(noise, feature_scale)
    lo, hi = field.min(), field.max()
    return (field - lo) / (hi - lo)


def _rect(mask, i0, i1, j0, j1):
    mi = mask.shape[0]
    mj = mask.shape[1]
    mask[int(i0 * mi):int(i1 * mi), int(j0 * mj):int(j1 * mj)] = True


def _glyph_t(shape):
    """Block letter 'T' occupying the center-left of the frame."""
    mask = np.zeros(shape, dtype=bool)
    _rect(mask, 0.20, 0.28, 0.10, 0.44)   # top bar
    _rect(mask, 0.28, 0.62, 0.23, 0.31)   # stem
    return mask


def _glyph_r(shape):
    """Blocky letter 'R' occupying the center-right of the frame."""
    mask = np.zeros(shape, dtype=bool)
    _rect(mask, 0.38, 0.82, 0.56, 0.64)   # stem
    _rect(mask, 0.38, 0.46, 0.56, 0.86)   # top bar
    _rect(mask, 0.56, 0.64, 0.56, 0.86)   # middle bar
    _rect(mask, 0.46, 0.56, 0.78, 0.86)   # bowl, right side
    m, n = shape[0], shape[1]
    ii, jj = np.mgrid[0:m, 0:n]
    u = ii / m
    v = jj / n
    leg = (u >= 0.64) & (u <= 0.82) & \
          (np.abs(v - (0.64 + 0.8 * (u - 0.64))) < 0.045)
    return mask | leg


def make_toy_example(size=(800, 800), seed=0):
    """Deterministic toy layers: textured 'T' and 'R' planes.

    Returns (t, r), both (M, N) grayscale in [0, 1]. The transmission
    layer is a posterized random field (flat patches separated by strong
    edges) carrying a dark 'T'; the reflection layer is a smooth blob
    field carrying a brighter 'R'. Sizes below 64x64 are rejected; the
    same (size, seed) always produces bit-identical layers.
    """
    m, n = int(size[0]), int(size[1])
    if m < 64 or n < 64:
        raise ValueError(f"toy layers need at least 64x64, got {m}x{n}")
    rng = np.random.default_rng(seed)

    # Transmission: 4 flat gray levels, 0.2 apart, so patch boundaries
    # stay above typical thresholds even after blending attenuation.
    base = _smooth_field(rng, (m, n), feature_scale=min(m, n) / 28)
    levels = np.array([0.35, 0.55, 0.75, 0.95])
    t = levels[np.minimum((base * len(levels)).astype(int), len(levels) - 1)]
    t = np.where(_glyph_t((m, n)), 0.05, t)

    # Reflection: high-amplitude smooth blobs plus a bright glyph; after
    # Gaussian blurring and (1-w) scaling its gradients stay weak.
    blobs = 0.08 + 0.8 * _smooth_field(rng, (m, n), feature_scale=min(m, n) / 16)
    r = np.where(_glyph_r((m, n)), 0.9, blobs)

    return t, r
