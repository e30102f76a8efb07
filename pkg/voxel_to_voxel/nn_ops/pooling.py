# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

import numpy as np

from numpy.lib.stride_tricks import sliding_window_view

from .params import PoolArgmax
from ..errors import ShapeError


def maxpool3d_forward(x, p):
    if np.ndim(x) != 4:
        raise ShapeError(
            "\n maxpool3d expects a (C, L, H, W) tensor, got dims {} \n".format(
                np.shape(x)
            )
        )
    C, L, H, W = x.shape
    Lo, Ho, Wo = p.pool_out(x.shape[1:])
    sL, sH, sW = p.stride
    kL, kH, kW = p.kernel

    windows = sliding_window_view(x, p.kernel, axis=(1, 2, 3))
    windows = windows[:, : sL * Lo : sL, : sH * Ho : sH, : sW * Wo : sW]
    windows = windows.reshape(C, Lo, Ho, Wo, kL * kH * kW)

    # row-major window order follows the input's flat order, so the first
    # maximum is the one with the smallest flat index
    local = np.argmax(windows, axis=-1)
    y = np.take_along_axis(windows, local[..., None], axis=-1)[..., 0]

    dl, dh, dw = np.unravel_index(local, p.kernel)
    c, lo, ho, wo = np.indices((C, Lo, Ho, Wo), sparse=True)
    indices = np.ravel_multi_index(
        (c, lo * sL + dl, ho * sH + dh, wo * sW + dw), (C, L, H, W)
    )

    return y, PoolArgmax(indices=indices, input_shape=x.shape)


def maxpool3d_backward(argmax, dy):
    if tuple(np.shape(dy)) != tuple(argmax.indices.shape):
        raise ShapeError(
            "\n maxpool3d upstream gradient dims {} do not match output dims {} \n".format(
                np.shape(dy), argmax.indices.shape
            )
        )
    n_input = int(np.prod(argmax.input_shape))
    dx = np.bincount(
        argmax.indices.ravel(), weights=dy.ravel(), minlength=n_input
    )
    return dx.astype(dy.dtype).reshape(argmax.input_shape)
