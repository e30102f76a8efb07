# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

import numpy as np
import pandas as pd

from ..nn_ops import (
    Conv3dParams,
    Deconv3dParams,
    Pool3dParams,
    conv3d_forward,
    conv3d_backward,
    deconv3d_forward,
    deconv3d_backward,
    maxpool3d_forward,
    maxpool3d_backward,
    relu_forward,
    relu_backward,
    concat_channels,
    concat_channels_backward,
    trilinear_upsample,
    trilinear_upsample_backward,
    gradcheck,
)
from ..losses_metrics import softmax_ce_loss, huber_loss, l2_loss

DEFAULT_TOLERANCE = 1e-2


def _away_from_zero(rng, shape, margin=0.1):
    # keeps |x| clear of the relu kink at 0
    x = rng.standard_normal(shape)
    return np.sign(x) * (margin + np.abs(x))


def _distinct(rng, shape, gap=0.01):
    # pairwise gaps wider than the finite-difference step, so argmaxes are stable
    return rng.permutation(int(np.prod(shape))).reshape(shape) * gap


def _conv_layers(rng):
    p = Conv3dParams(
        kernel=3,
        stride=(1, 2, 2),
        pad=1,
        in_channels=2,
        out_channels=3,
        weights=rng.standard_normal((3, 2, 3, 3, 3)),
        bias=rng.standard_normal(3),
    )
    x = rng.standard_normal((2, 4, 6, 6))

    def conv_x(x_):
        return conv3d_forward(x_, p), lambda dy: conv3d_backward(x_, p, dy)[0]

    def conv_w(w_):
        p_w = Conv3dParams(p.kernel, p.stride, p.pad, 2, 3, w_, p.bias)
        return conv3d_forward(x, p_w), lambda dy: conv3d_backward(x, p_w, dy)[1]

    return {"conv3d.x": (conv_x, x), "conv3d.w": (conv_w, p.weights)}


def _deconv_layers(rng):
    p = Deconv3dParams(
        kernel=4,
        stride=2,
        pad=1,
        in_channels=2,
        out_channels=2,
        weights=rng.standard_normal((2, 2, 4, 4, 4)),
        bias=rng.standard_normal(2),
    )
    x = rng.standard_normal((2, 2, 3, 3))

    def deconv_x(x_):
        return deconv3d_forward(x_, p), lambda dy: deconv3d_backward(x_, p, dy)[0]

    def deconv_w(w_):
        p_w = Deconv3dParams(p.kernel, p.stride, p.pad, 2, 2, w_, p.bias)
        return deconv3d_forward(x, p_w), lambda dy: deconv3d_backward(x, p_w, dy)[1]

    return {"deconv3d.x": (deconv_x, x), "deconv3d.w": (deconv_w, p.weights)}


def _other_layers(rng):
    pool = Pool3dParams(kernel=2)
    other = rng.standard_normal((1, 2, 3, 3))

    def maxpool(x_):
        y, argmax = maxpool3d_forward(x_, pool)
        return y, lambda dy: maxpool3d_backward(argmax, dy)

    def relu(x_):
        return relu_forward(x_), lambda dy: relu_backward(x_, dy)

    def concat(x_):
        return concat_channels(x_, other), lambda dy: concat_channels_backward(dy, 2)[0]

    def upsample(x_):
        return (
            trilinear_upsample(x_, (4, 6, 6)),
            lambda dy: trilinear_upsample_backward(x_.shape, dy),
        )

    return {
        "maxpool3d": (maxpool, _distinct(rng, (2, 4, 4, 4))),
        "relu": (relu, _away_from_zero(rng, (2, 3, 4, 4))),
        "concat": (concat, rng.standard_normal((2, 2, 3, 3))),
        "trilinear_up": (upsample, rng.standard_normal((2, 2, 3, 3))),
    }


def _loss_layers(rng):
    labels = rng.integers(0, 4, size=(2, 3, 3))
    labels[0, 0, 0] = 255
    # residuals clear of the huber knee at |r| = 1
    magnitude = rng.choice([0.3, 0.6, 1.6, 2.4], size=(2, 2, 3, 3))
    residual = np.sign(rng.standard_normal(magnitude.shape)) * magnitude
    target = rng.standard_normal((2, 2, 3, 3))

    def scalar(loss_fn, *args):
        def layer(x_):
            loss, grad = loss_fn(x_, *args)
            return np.array(loss), lambda dy: grad * dy

        return layer

    return {
        "softmax_ce": (scalar(softmax_ce_loss, labels), rng.standard_normal((4, 2, 3, 3))),
        "huber": (scalar(huber_loss, target), target + residual),
        "l2": (scalar(l2_loss, target), rng.standard_normal((2, 2, 3, 3))),
    }


def layer_suite(seed=0):
    rng = np.random.default_rng(seed)
    suite = {}
    for build in (_conv_layers, _deconv_layers, _other_layers, _loss_layers):
        suite.update(build(rng))
    return suite


def run_gradchecks(eps=1e-3, n_samples=64, seed=0, tolerance=DEFAULT_TOLERANCE):
    rows = []
    for name, (layer, x) in layer_suite(seed).items():
        error = gradcheck(layer, x, eps=eps, n_samples=n_samples, random_state=seed)
        rows.append((name, error, error <= tolerance))
    return pd.DataFrame(rows, columns=["op", "max_rel_error", "passed"])
