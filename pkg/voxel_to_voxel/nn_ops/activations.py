# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

import numpy as np

from ..errors import ShapeError


def relu_forward(x):
    return np.maximum(x, 0).astype(x.dtype, copy=False)


def relu_backward(x, dy):
    if np.shape(x) != np.shape(dy):
        raise ShapeError(
            "\n relu gradient dims {} do not match input dims {} \n".format(
                np.shape(dy), np.shape(x)
            )
        )
    # subgradient 0 at x == 0
    return np.where(x > 0, dy, 0).astype(dy.dtype, copy=False)


def concat_channels(a, b):
    if np.ndim(a) != 4 or np.ndim(b) != 4 or a.shape[1:] != b.shape[1:]:
        raise ShapeError(
            "\n Cannot concatenate {} and {}: (L, H, W) must agree \n".format(
                np.shape(a), np.shape(b)
            )
        )
    return np.concatenate([a, b], axis=0)


def concat_channels_backward(dy, n_channels_a):
    return dy[:n_channels_a], dy[n_channels_a:]
