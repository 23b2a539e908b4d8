"""Image containers and the 8-bit codec boundary.

Images are plain numpy arrays in double precision: shape (M, N) for
grayscale or (M, N, C) with C in {1, 3}. Values are nominally in [0, 1]
at the codec boundary but are unbounded inside the pipeline; clamping
happens only at encode time so metrics can see raw solver output.
"""

import io
import warnings

import numpy as np
from PIL import Image, UnidentifiedImageError

__all__ = [
    "DecodeError",
    "UnsupportedFormatError",
    "as_image",
    "decode_image",
    "encode_image",
]


class DecodeError(ValueError):
    """The byte stream could not be parsed as an image."""


class UnsupportedFormatError(ValueError):
    """Decodable, but outside 8-bit grayscale/RGB."""


# Pillow modes we accept directly, and the alpha modes we reduce.
_MODE_OK = {"L", "RGB"}
_MODE_DROP_ALPHA = {"LA": "L", "RGBA": "RGB"}


def as_image(a):
    """Validate an array as an image: float64, (M, N) or (M, N, {1,3})."""
    a = np.asarray(a, dtype=np.float64)
    if a.ndim == 2:
        pass
    elif a.ndim == 3 and a.shape[2] in (1, 3):
        pass
    else:
        raise ValueError(
            f"expected shape (M, N) or (M, N, 1|3), got {a.shape}"
        )
    if a.shape[0] < 1 or a.shape[1] < 1:
        raise ValueError(f"empty image axis in shape {a.shape}")
    return a


def decode_image(data):
    """Decode 8-bit PNG or JPEG bytes to a float64 array in [0, 1].

    Grayscale keeps shape (M, N); RGB becomes (M, N, 3). Alpha channels
    are dropped with a warning. Palette, 16-bit and other exotic layouts
    raise UnsupportedFormatError.
    """
    try:
        img = Image.open(io.BytesIO(data))
        img.load()
    except UnidentifiedImageError as exc:
        raise DecodeError(f"cannot parse image stream: {exc}") from exc
    except OSError as exc:
        raise DecodeError(f"corrupt image stream: {exc}") from exc

    if img.mode in _MODE_DROP_ALPHA:
        warnings.warn(
            f"dropping alpha channel of {img.mode} image", stacklevel=2
        )
        img = img.convert(_MODE_DROP_ALPHA[img.mode])
    if img.mode not in _MODE_OK:
        raise UnsupportedFormatError(
            f"unsupported image mode {img.mode!r}; need 8-bit gray or RGB"
        )
    return np.asarray(img, dtype=np.float64) / 255.0


def encode_image(img):
    """Encode an image array as 8-bit PNG bytes.

    Values are clamped to [0, 1] and quantized by round(255 * v); this is
    the only place the pipeline clamps.
    """
    a = as_image(img)
    if a.ndim == 3 and a.shape[2] == 1:
        a = a[:, :, 0]
    q = np.rint(np.clip(a, 0.0, 1.0) * 255.0).astype(np.uint8)
    out = Image.fromarray(q)  # mode L for 2-D, RGB for (M, N, 3)
    buf = io.BytesIO()
    out.save(buf, format="PNG")
    return buf.getvalue()
