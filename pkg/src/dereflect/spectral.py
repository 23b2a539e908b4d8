"""Cosine-basis spectral solvers for the reflective-boundary Laplacian.

The forward/backward transforms are the orthonormal 2-D DCT-II, whose
basis diagonalizes ``gradients.laplacian``: transforming the Laplacian
of a plane equals multiplying its transform elementwise by the
eigenvalue grid from :func:`laplacian_eigenvalues`. That identity is
what turns the Poisson and screened fourth-order solves below into a
single elementwise division.
"""

from functools import lru_cache

import numpy as np
from scipy import fft as _fft

__all__ = [
    "dct2",
    "idct2",
    "laplacian_eigenvalues",
    "solve_poisson",
    "solve_screened_biharmonic",
]

# Relative slack allowed on the zero-sum solvability condition of the
# pure Poisson solve.
POISSON_MEAN_TOL = 1e-8


@lru_cache(maxsize=64)
def _eigenvalue_grid(m, n):
    km = 2.0 * (np.cos(np.pi * np.arange(m) / m) - 1.0)
    kn = 2.0 * (np.cos(np.pi * np.arange(n) / n) - 1.0)
    k = km[:, None] + kn[None, :]
    k.setflags(write=False)
    return k


def laplacian_eigenvalues(m, n):
    """Eigenvalue grid K of the reflective-boundary Laplacian.

    K[p, q] = 2*(cos(p*pi/m) + cos(q*pi/n) - 2), a read-only (m, n)
    array cached per shape. K[0, 0] = 0 and every other entry is
    strictly negative, with -8 <= K <= 0.
    """
    if m < 1 or n < 1:
        raise ValueError(f"grid must be at least 1x1, got {m}x{n}")
    return _eigenvalue_grid(int(m), int(n))


def dct2(a):
    """Orthonormal 2-D DCT-II over the first two axes."""
    a = np.asarray(a, dtype=np.float64)
    return _fft.dctn(a, type=2, norm="ortho", axes=(0, 1), workers=-1)


def idct2(s):
    """Inverse of :func:`dct2` (orthonormal 2-D DCT-III)."""
    s = np.asarray(s, dtype=np.float64)
    return _fft.idctn(s, type=2, norm="ortho", axes=(0, 1), workers=-1)


def _broadcast_kernel(k, ndim):
    return k[:, :, None] if ndim == 3 else k


def solve_poisson(f):
    """Solve laplacian(T) = f with reflective boundary, zero-mean T.

    The operator is singular on constants, so f must have (numerically)
    zero pixel sum per channel; the returned solution pins the free
    constant by zeroing the spectral DC coefficient.
    """
    f = np.asarray(f, dtype=np.float64)
    axes = (0, 1)
    total = np.abs(f.sum(axis=axes))
    if np.any(total > POISSON_MEAN_TOL * np.abs(f).sum(axis=axes)):
        raise ValueError(
            "infeasible right-hand side: pixel sum must be zero for the "
            "reflective-boundary Poisson problem"
        )
    k = laplacian_eigenvalues(f.shape[0], f.shape[1]).copy()
    k[0, 0] = 1.0  # dummy divisor; the DC coefficient is zeroed below
    s = dct2(f) / _broadcast_kernel(k, f.ndim)
    s[0, 0] = 0.0
    return idct2(s)


@lru_cache(maxsize=64)
def _screen_denominator(m, n, epsilon):
    k = _eigenvalue_grid(m, n)
    denom = k * k + epsilon
    denom.setflags(write=False)
    return denom


def solve_screened_biharmonic(p, epsilon):
    """Solve (laplacian^2 + epsilon) T = p in closed form.

    The screening term makes the system uniquely solvable for any p:
    the solution is the inverse transform of dct2(p) / (K^2 + epsilon).
    """
    if epsilon <= 0:
        raise ValueError(f"epsilon must be positive, got {epsilon}")
    p = np.asarray(p, dtype=np.float64)
    denom = _screen_denominator(p.shape[0], p.shape[1], float(epsilon))
    s = dct2(p)
    s /= _broadcast_kernel(denom, p.ndim)
    return idct2(s)
