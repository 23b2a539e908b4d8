"""Shared independent oracles for the test suite.

Everything here is deliberately written the slow, literal way (index
loops, dense matrices, arbitrary-precision solves) so it shares no code
path with the library implementations it checks.
"""

import math

import numpy as np
import pytest


def loop_grad(a):
    """Forward differences via explicit index loops."""
    m, n = a.shape
    gx = np.zeros((m, n))
    gy = np.zeros((m, n))
    for i in range(m):
        for j in range(n):
            if j < n - 1:
                gx[i, j] = a[i, j + 1] - a[i, j]
            if i < m - 1:
                gy[i, j] = a[i + 1, j] - a[i, j]
    return gx, gy


def dense_laplacian(m, n):
    """Dense 5-point Laplacian with mirror extension, built per index.

    Out-of-range neighbors are folded back onto the center sample, which
    removes their contribution entirely; only in-range neighbors add the
    usual (neighbor - center) term.
    """
    size = m * n
    mat = np.zeros((size, size))
    for i in range(m):
        for j in range(n):
            row = i * n + j
            for ii, jj in ((i - 1, j), (i + 1, j), (i, j - 1), (i, j + 1)):
                if 0 <= ii < m and 0 <= jj < n:
                    mat[row, ii * n + jj] += 1.0
                    mat[row, row] -= 1.0
    return mat


def naive_dct2(a):
    """Literal O((MN)^2) orthonormal cosine-sum transform."""
    m, n = a.shape
    out = np.zeros((m, n))
    for p in range(m):
        sp = math.sqrt(1.0 / m) if p == 0 else math.sqrt(2.0 / m)
        for q in range(n):
            sq = math.sqrt(1.0 / n) if q == 0 else math.sqrt(2.0 / n)
            acc = 0.0
            for i in range(m):
                ci = math.cos(math.pi * p * (2 * i + 1) / (2 * m))
                for j in range(n):
                    cj = math.cos(math.pi * q * (2 * j + 1) / (2 * n))
                    acc += a[i, j] * ci * cj
            out[p, q] = sp * sq * acc
    return out


def naive_idct2_onehot(m, n, p, q):
    """The (p, q) cosine basis plane the inverse transform must produce."""
    sp = math.sqrt(1.0 / m) if p == 0 else math.sqrt(2.0 / m)
    sq = math.sqrt(1.0 / n) if q == 0 else math.sqrt(2.0 / n)
    out = np.zeros((m, n))
    for i in range(m):
        for j in range(n):
            out[i, j] = (sp * sq
                         * math.cos(math.pi * p * (2 * i + 1) / (2 * m))
                         * math.cos(math.pi * q * (2 * j + 1) / (2 * n)))
    return out


def mp_screened_solve(p, epsilon, dps=40):
    """Solve (L^2 + epsilon) x = p by arbitrary-precision dense LU.

    float64 dense solvers cannot certify this system at epsilon = 1e-8
    (the near-null mode amplifies their own round-off by 1/epsilon), so
    the oracle runs at 40 significant digits.
    """
    import mpmath as mp

    m, n = p.shape
    lap = dense_laplacian(m, n)
    with mp.workdps(dps):
        system = mp.matrix((lap @ lap).tolist()) + mp.mpf(epsilon) * mp.eye(m * n)
        sol = mp.lu_solve(system, mp.matrix(p.ravel().tolist()))
        return np.array([float(v) for v in sol]).reshape(m, n)


def ssim_oracle(a, b, win=11, sigma=1.5, c1=0.01 ** 2, c2=0.03 ** 2):
    """SSIM straight from the definition: one explicit 11x11 window
    of Gaussian weights slid over every fully interior position."""
    half = win // 2
    x = np.arange(-half, half + 1, dtype=float)
    taps = np.exp(-0.5 * (x / sigma) ** 2)
    weights = np.outer(taps, taps)
    weights /= weights.sum()

    m, n = a.shape
    scores = []
    for i in range(half, m - half):
        for j in range(half, n - half):
            pa = a[i - half:i + half + 1, j - half:j + half + 1]
            pb = b[i - half:i + half + 1, j - half:j + half + 1]
            mu_a = (weights * pa).sum()
            mu_b = (weights * pb).sum()
            var_a = (weights * pa * pa).sum() - mu_a ** 2
            var_b = (weights * pb * pb).sum() - mu_b ** 2
            cov = (weights * pa * pb).sum() - mu_a * mu_b
            scores.append(
                ((2 * mu_a * mu_b + c1) * (2 * cov + c2))
                / ((mu_a ** 2 + mu_b ** 2 + c1) * (var_a + var_b + c2))
            )
    return float(np.mean(scores))


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
