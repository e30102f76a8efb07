# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

import numpy as np

from ..errors import ShapeError


def interp_matrix(n_in, n_out):
    """
    (n_out, n_in) linear interpolation matrix with half-pixel centres:
    src = (dst + 0.5) * n_in / n_out - 0.5, clamped to [0, n_in - 1].
    """
    dst = np.arange(n_out, dtype=np.float64)
    src = (dst + 0.5) * (n_in / n_out) - 0.5
    src = np.clip(src, 0, n_in - 1)

    i0 = np.floor(src).astype(int)
    i1 = np.minimum(i0 + 1, n_in - 1)
    frac = src - i0

    matrix = np.zeros((n_out, n_in), dtype=np.float64)
    np.add.at(matrix, (np.arange(n_out), i0), 1 - frac)
    np.add.at(matrix, (np.arange(n_out), i1), frac)
    return matrix


def _matrices(in_spatial, out_spatial, dtype):
    return [interp_matrix(n, m).astype(dtype) for n, m in zip(in_spatial, out_spatial)]


def _check(x, out):
    if np.ndim(x) != 4:
        raise ShapeError(
            "\n trilinear_upsample expects (C, L, H, W), got dims {} \n".format(
                np.shape(x)
            )
        )
    out = tuple(int(n) for n in out)
    if len(out) != 3 or any(m < n for n, m in zip(x.shape[1:], out)):
        raise ShapeError(
            "\n Downsample requested: {} -> {}, output must not be smaller \n".format(
                x.shape[1:], out
            )
        )
    return out


def trilinear_upsample(x, out):
    out = _check(x, out)
    mL, mH, mW = _matrices(x.shape[1:], out, x.dtype)

    y = np.einsum("al,clhw->cahw", mL, x, optimize=True)
    y = np.einsum("bh,cahw->cabw", mH, y, optimize=True)
    return np.einsum("dw,cabw->cabd", mW, y, optimize=True)


def trilinear_upsample_backward(in_shape, dy):
    C, l, h, w = in_shape
    mL, mH, mW = _matrices((l, h, w), dy.shape[1:], dy.dtype)

    dx = np.einsum("dw,cabd->cabw", mW, dy, optimize=True)
    dx = np.einsum("bh,cabw->cahw", mH, dx, optimize=True)
    return np.einsum("al,cahw->clhw", mL, dx, optimize=True)
