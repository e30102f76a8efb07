# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

"""
3D convolution and its adjoint.

Convolution uses the cross-correlation convention (no kernel flip) with zero
padding. Weights are [out, in, kL, kH, kW]. The transposed convolution
(deconvolution) reuses the same machinery: its forward pass is the input
gradient of a convolution with identical geometry, and its input gradient is
that convolution's forward pass.
"""

import numpy as np

from itertools import product
from numpy.lib.stride_tricks import sliding_window_view

from ..errors import ShapeError


def _check_input(x, in_channels, name):
    if np.ndim(x) != 4:
        raise ShapeError(
            "\n {} expects a (C, L, H, W) tensor, got dims {} \n".format(
                name, np.shape(x)
            )
        )
    if x.shape[0] != in_channels:
        raise ShapeError(
            "\n {} channel mismatch: input has {} channels, layer expects {} \n".format(
                name, x.shape[0], in_channels
            )
        )


def _check_grad(dy, expected, name):
    if tuple(np.shape(dy)) != tuple(expected):
        raise ShapeError(
            "\n {} upstream gradient dims {} do not match output dims {} \n".format(
                name, tuple(np.shape(dy)), tuple(expected)
            )
        )


def _pad(x, pad):
    if pad == (0, 0, 0):
        return x
    return np.pad(x, ((0, 0),) + tuple((p, p) for p in pad))


def im2col(x, geometry, out):
    """
    Strided window view of the zero padded input with dims
    (C, Lo, Ho, Wo, kL, kH, kW). No copy is made.
    """
    xp = _pad(x, geometry.pad)
    sL, sH, sW = geometry.stride
    Lo, Ho, Wo = out

    windows = sliding_window_view(xp, geometry.kernel, axis=(1, 2, 3))
    return windows[:, : sL * Lo : sL, : sH * Ho : sH, : sW * Wo : sW]


def col2im(dcols, geometry, in_shape):
    """
    Scatter-add of per-window gradients (C, kL, kH, kW, Lo, Ho, Wo) back into
    an input of dims in_shape; padding is cropped away.
    """
    C, L, H, W = in_shape
    pL, pH, pW = geometry.pad
    sL, sH, sW = geometry.stride
    Lo, Ho, Wo = dcols.shape[-3:]

    dxp = np.zeros((C, L + 2 * pL, H + 2 * pH, W + 2 * pW), dtype=dcols.dtype)
    for dl, dh, dw in product(*[range(k) for k in geometry.kernel]):
        dxp[
            :,
            dl : dl + sL * Lo : sL,
            dh : dh + sH * Ho : sH,
            dw : dw + sW * Wo : sW,
        ] += dcols[:, dl, dh, dw]

    return dxp[:, pL : pL + L, pH : pH + H, pW : pW + W]


def _correlate(cols, weights):
    # (O, C, k..) x (C, Lo, Ho, Wo, k..) -> (O, Lo, Ho, Wo)
    return np.tensordot(weights, cols, axes=([1, 2, 3, 4], [0, 4, 5, 6]))


def _correlate_adjoint(dy, weights, geometry, in_shape):
    dcols = np.tensordot(weights, dy, axes=([0], [0]))
    return col2im(dcols, geometry, in_shape)


def _add_bias(y, bias):
    return y + bias.astype(y.dtype, copy=False)[:, None, None, None]


def conv3d_forward(x, p):
    _check_input(x, p.in_channels, "conv3d")
    out = p.conv_out(x.shape[1:])

    cols = im2col(x, p, out)
    return _add_bias(_correlate(cols, p.weights), p.bias)


def conv3d_backward(x, p, dy):
    _check_input(x, p.in_channels, "conv3d")
    out = p.conv_out(x.shape[1:])
    _check_grad(dy, (p.out_channels,) + out, "conv3d")

    cols = im2col(x, p, out)

    db = dy.sum(axis=(1, 2, 3))
    dw = np.tensordot(dy, cols, axes=([1, 2, 3], [1, 2, 3]))
    dx = _correlate_adjoint(dy, p.weights, p, x.shape)

    return dx, dw, db


def deconv3d_forward(x, p):
    _check_input(x, p.in_channels, "deconv3d")
    out = p.deconv_out(x.shape[1:])

    y = _correlate_adjoint(x, p.weights, p, (p.out_channels,) + out)
    return _add_bias(y, p.bias)


def deconv3d_backward(x, p, dy):
    _check_input(x, p.in_channels, "deconv3d")
    out = p.deconv_out(x.shape[1:])
    _check_grad(dy, (p.out_channels,) + out, "deconv3d")

    # the windows of dy are exactly the receptive fields of each input voxel
    cols = im2col(dy, p, x.shape[1:])

    db = dy.sum(axis=(1, 2, 3))
    dw = np.tensordot(x, cols, axes=([1, 2, 3], [1, 2, 3]))
    dx = _correlate(cols, p.weights)

    return dx, dw, db

