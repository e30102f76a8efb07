import pytest
import numpy as np

from voxel_to_voxel.networks import (
    TaskHead,
    build_v2v,
    build_baseline_up,
    init_params,
    interp_kernel,
    forward,
)
from voxel_to_voxel.nn_ops import Deconv3dParams, deconv3d_forward, trilinear_upsample
from voxel_to_voxel.errors import V2VError

from .._tiny import TINY_SHAPE, TINY_WIDTH

seg8 = TaskHead.segmentation(8)


def test_same_seed_same_params():
    g1 = build_v2v(seg8, TINY_SHAPE, TINY_WIDTH)
    g2 = build_v2v(seg8, TINY_SHAPE, TINY_WIDTH)
    init_params(g1, 7)
    init_params(g2, 7)

    for name in g1.params:
        assert g1.params[name].tobytes() == g2.params[name].tobytes()


def test_other_seed_other_params():
    g1 = build_v2v(seg8, TINY_SHAPE, TINY_WIDTH)
    g2 = build_v2v(seg8, TINY_SHAPE, TINY_WIDTH)
    init_params(g1, 0)
    init_params(g2, 1)
    assert not np.array_equal(g1.params["conv1a.w"], g2.params["conv1a.w"])


def test_biases_zero_float32():
    g = build_v2v(seg8, TINY_SHAPE, TINY_WIDTH)
    init_params(g, 0)

    for name, value in g.params.items():
        assert value.dtype == np.float32
        if name.endswith(".b"):
            assert not value.any()


def test_he_std_conv1a():
    g = build_baseline_up("conv3b", seg8, (3, 16, 16, 16))
    init_params(g, 0)

    std = g.params["conv1a.w"].std()
    assert std == pytest.approx(np.sqrt(2 / (3 * 27)), rel=0.1)


def test_unknown_scheme():
    g = build_v2v(seg8, TINY_SHAPE, TINY_WIDTH)
    with pytest.raises(V2VError):
        init_params(g, 0, "xavier")


def test_interp_kernel_values():
    kernel = interp_kernel((4, 4, 8))
    np.testing.assert_allclose(kernel[:, 0, 0], np.array([0.25, 0.75, 0.75, 0.25]) * 0.25 * 0.125)
    np.testing.assert_allclose(
        kernel[1, 1], 0.75 * 0.75 * np.array([1, 3, 5, 7, 7, 5, 3, 1]) / 8
    )


def test_trilinear_deconv_init_identity_map():
    g = build_v2v(seg8, TINY_SHAPE, TINY_WIDTH)
    init_params(g, 0, "he+trilinear-deconv")

    w = g.params["deconv5.w"]
    c_in, c_out = w.shape[:2]
    kernel = interp_kernel((4, 4, 4)).astype(np.float32)
    for i in range(c_in):
        for o in range(c_out):
            expected = kernel if i == o else np.zeros_like(kernel)
            assert np.array_equal(w[i, o], expected)


def test_trilinear_deconv_init_keeps_conv_draws():
    g_he = build_v2v(seg8, TINY_SHAPE, TINY_WIDTH)
    g_tri = build_v2v(seg8, TINY_SHAPE, TINY_WIDTH)
    init_params(g_he, 3)
    init_params(g_tri, 3, "he+trilinear-deconv")

    assert np.array_equal(g_he.params["conv_pre.w"], g_tri.params["conv_pre.w"])


def test_trilinear_deconv_matches_upsample():
    g = build_v2v(seg8, TINY_SHAPE, TINY_WIDTH)
    init_params(g, 0, "he+trilinear-deconv")
    layer = g.layer("deconv5")
    p = layer.conv_params(g.params)

    x = np.random.default_rng(0).random((layer.in_channels, 3, 4, 4)).astype(np.float32)
    y = deconv3d_forward(x, p)
    expected = trilinear_upsample(x[: layer.out_channels], y.shape[1:])

    inside = (slice(None), slice(1, -1), slice(1, -1), slice(1, -1))
    np.testing.assert_allclose(y[inside], expected[inside], atol=1e-5)


def test_init_forward_finite():
    g = build_v2v(seg8, TINY_SHAPE, TINY_WIDTH)
    init_params(g, 0)
    x = np.random.default_rng(0).random(TINY_SHAPE).astype(np.float32)

    prediction, _ = forward(g, x)
    assert np.isfinite(prediction).all()
    assert prediction.std() > 0
