import numpy as np
import pytest

from dereflect.gradients import (
    div,
    grad,
    gradient_magnitude,
    laplacian,
    threshold_gradients,
)

from conftest import dense_laplacian, loop_grad


def test_grad_of_constant_is_zero():
    gx, gy = grad(np.full((6, 9), 0.37))
    assert not gx.any()
    assert not gy.any()


def test_grad_of_row_ramp():
    a = np.arange(8, dtype=float)[None, :]
    gx, gy = grad(a)
    assert np.array_equal(gx, np.array([[1.0] * 7 + [0.0]]))
    assert not gy.any()


def test_grad_matches_loop_oracle(rng):
    a = rng.standard_normal((5, 4))
    gx, gy = grad(a)
    ox, oy = loop_grad(a)
    assert np.array_equal(gx, ox)
    assert np.array_equal(gy, oy)


def test_grad_boundary_lines_are_zero(rng):
    gx, gy = grad(rng.standard_normal((7, 5)))
    assert not gx[:, -1].any()
    assert not gy[-1, :].any()


def test_div_of_zero_field():
    z = np.zeros((4, 6))
    assert not div(z, z).any()


def test_div_is_negative_adjoint_of_grad(rng):
    for _ in range(25):
        a = rng.standard_normal((6, 5))
        gx, gy = rng.standard_normal((2, 6, 5))
        lhs = np.vdot(grad(a)[0], gx) + np.vdot(grad(a)[1], gy)
        rhs = -np.vdot(a, div(gx, gy))
        assert abs(lhs - rhs) < 1e-12


def test_div_shape_mismatch():
    with pytest.raises(ValueError):
        div(np.zeros((3, 3)), np.zeros((3, 4)))


def test_laplacian_matches_dense_matrix(rng):
    # matmul associates the same +/- terms differently, so allow the
    # last-ulp wiggle; the basis-vector test below is bitwise
    a = rng.standard_normal((4, 4))
    dense = dense_laplacian(4, 4) @ a.ravel()
    assert np.abs(laplacian(a) - dense.reshape(4, 4)).max() < 1e-13


def test_laplacian_exhaustive_small_grids():
    for m in range(2, 9):
        for n in range(2, 9):
            dense = dense_laplacian(m, n)
            for k in range(m * n):
                e = np.zeros(m * n)
                e[k] = 1.0
                got = laplacian(e.reshape(m, n)).ravel()
                assert np.array_equal(got, dense @ e), (m, n, k)


def test_laplacian_of_constant_and_flux_conservation(rng):
    assert not laplacian(np.full((5, 8), 2.5)).any()
    a = rng.standard_normal((9, 7))
    assert abs(laplacian(a).sum()) < 1e-12


def test_laplacian_interior_stencil(rng):
    a = rng.standard_normal((5, 5))
    lap = laplacian(a)
    i, j = 2, 3
    expect = a[i - 1, j] + a[i + 1, j] + a[i, j - 1] + a[i, j + 1] - 4 * a[i, j]
    assert lap[i, j] == pytest.approx(expect, abs=1e-14)


def test_threshold_zero_is_identity(rng):
    gx, gy = rng.standard_normal((2, 6, 6))
    tx, ty = threshold_gradients(gx, gy, 0.0)
    assert np.array_equal(tx, gx)
    assert np.array_equal(ty, gy)


def test_threshold_above_max_zeroes_everything(rng):
    gx, gy = rng.standard_normal((2, 6, 6))
    big = float(np.hypot(gx, gy).max()) + 1.0
    tx, ty = threshold_gradients(gx, gy, big)
    assert not tx.any()
    assert not ty.any()


def test_threshold_boundary_tie_is_kept():
    # 3-4-5 triangle: magnitude is exactly the threshold, so keep.
    gx = np.array([[0.06]])
    gy = np.array([[0.08]])
    tx, ty = threshold_gradients(gx, gy, 0.1)
    assert tx[0, 0] == 0.06 and ty[0, 0] == 0.08


def test_threshold_negative_h_rejected():
    with pytest.raises(ValueError):
        threshold_gradients(np.zeros((2, 2)), np.zeros((2, 2)), -0.1)


def test_threshold_monotone_sparsification(rng):
    gx, gy = 0.2 * rng.standard_normal((2, 32, 32))
    counts = []
    for h in np.arange(0.0, 0.5, 0.02):
        tx, ty = threshold_gradients(gx, gy, h)
        counts.append(int(((tx != 0) | (ty != 0)).sum()))
    assert all(a >= b for a, b in zip(counts, counts[1:]))


def test_threshold_idempotent(rng):
    gx, gy = rng.standard_normal((2, 12, 9))
    once = threshold_gradients(gx, gy, 0.7)
    twice = threshold_gradients(*once, 0.7)
    assert np.array_equal(once[0], twice[0])
    assert np.array_equal(once[1], twice[1])


def test_threshold_joint_shares_mask_across_channels(rng):
    gx, gy = rng.standard_normal((2, 8, 8, 3))
    tx, ty = threshold_gradients(gx, gy, 0.8, joint=True)
    zero = (tx == 0) & (ty == 0)
    # a dropped pixel is dropped in every channel
    dropped = zero.all(axis=2)
    assert np.array_equal(zero, np.repeat(dropped[:, :, None], 3, axis=2))


def test_threshold_joint_equals_per_channel_on_replicated_channels(rng):
    plane = rng.standard_normal((10, 10))
    gx = np.repeat(plane[:, :, None], 3, axis=2)
    gy = np.repeat(plane[:, :, None] * 0.5, 3, axis=2)
    per = threshold_gradients(gx, gy, 0.6, joint=False)
    joint = threshold_gradients(gx, gy, 0.6, joint=True)
    assert np.array_equal(per[0], joint[0])
    assert np.array_equal(per[1], joint[1])


def test_gradient_magnitude_shapes(rng):
    gx, gy = rng.standard_normal((2, 5, 4, 3))
    assert gradient_magnitude(gx, gy).shape == (5, 4, 3)
    assert gradient_magnitude(gx, gy, joint=True).shape == (5, 4, 1)
