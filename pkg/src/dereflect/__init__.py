"""Fast single-image reflection suppression.

Weak image gradients (the blurred reflection) are thresholded away and
the image is rebuilt from the surviving edges by a closed-form screened
fourth-order solve in the cosine basis. See :func:`suppress` for the
one-call entry point.
"""

from .gradients import (
    div,
    grad,
    gradient_magnitude,
    laplacian,
    threshold_gradients,
)
from .image_io import (
    DecodeError,
    UnsupportedFormatError,
    as_image,
    decode_image,
    encode_image,
)
from .metrics import MetricReport, psnr, ssim
from .spectral import (
    dct2,
    idct2,
    laplacian_eigenvalues,
    solve_poisson,
    solve_screened_biharmonic,
)
from .suppression import (
    DEFAULT_EPSILON,
    DEFAULT_H,
    build_rhs,
    suppress,
    suppress_with_gradients,
)
from .synthesis import blend, gaussian_blur, gaussian_kernel, make_toy_example

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_EPSILON",
    "DEFAULT_H",
    "DecodeError",
    "MetricReport",
    "UnsupportedFormatError",
    "as_image",
    "blend",
    "build_rhs",
    "dct2",
    "decode_image",
    "div",
    "encode_image",
    "gaussian_blur",
    "gaussian_kernel",
    "grad",
    "gradient_magnitude",
    "idct2",
    "laplacian",
    "laplacian_eigenvalues",
    "make_toy_example",
    "psnr",
    "solve_poisson",
    "solve_screened_biharmonic",
    "ssim",
    "suppress",
    "suppress_with_gradients",
    "threshold_gradients",
]
