# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

import numpy as np

from dataclasses import dataclass, field
from typing import Optional, Tuple

from ..errors import ShapeError


def triple(value):
    if np.isscalar(value):
        return (int(value),) * 3
    value = tuple(int(v) for v in value)
    if len(value) != 3:
        raise ShapeError("\n Expected 3 values (L, H, W), got {} \n".format(value))
    return value


def conv_out_size(size, kernel, stride, pad):
    return (size + 2 * pad - kernel) // stride + 1


def deconv_out_size(size, kernel, stride, pad):
    return stride * (size - 1) + kernel - 2 * pad


def pool_out_size(size, kernel, stride):
    return (size - kernel) // stride + 1


@dataclass
class Geometry:
    kernel: Tuple[int, int, int]
    stride: Tuple[int, int, int] = (1, 1, 1)
    pad: Tuple[int, int, int] = (0, 0, 0)

    def __post_init__(self):
        self.kernel = triple(self.kernel)
        self.stride = triple(self.stride)
        self.pad = triple(self.pad)

        if min(self.kernel) < 1 or min(self.stride) < 1 or min(self.pad) < 0:
            raise ShapeError(
                "\n Invalid geometry kernel={} stride={} pad={} \n".format(
                    self.kernel, self.stride, self.pad
                )
            )

    def conv_out(self, spatial):
        out = tuple(
            conv_out_size(n, k, s, p)
            for n, k, s, p in zip(spatial, self.kernel, self.stride, self.pad)
        )
        if min(out) < 1:
            raise ShapeError(
                "\n Non-positive convolution output shape {} for input {} \n".format(
                    out, tuple(spatial)
                )
            )
        return out

    def deconv_out(self, spatial):
        out = tuple(
            deconv_out_size(n, k, s, p)
            for n, k, s, p in zip(spatial, self.kernel, self.stride, self.pad)
        )
        if min(out) < 1:
            raise ShapeError(
                "\n Non-positive deconvolution output shape {} for input {} \n".format(
                    out, tuple(spatial)
                )
            )
        return out

    def pool_out(self, spatial):
        out = tuple(
            pool_out_size(n, k, s)
            for n, k, s in zip(spatial, self.kernel, self.stride)
        )
        if min(out) < 1:
            raise ShapeError(
                "\n Non-positive pooling output shape {} for input {} \n".format(
                    out, tuple(spatial)
                )
            )
        return out


@dataclass
class Conv3dParams(Geometry):
    in_channels: int = 1
    out_channels: int = 1
    weights: Optional[np.ndarray] = field(default=None, repr=False)
    bias: Optional[np.ndarray] = field(default=None, repr=False)

    def __post_init__(self):
        super().__post_init__()
        if self.weights is None:
            self.weights = np.zeros(self.weight_shape, dtype=np.float32)
        if self.bias is None:
            self.bias = np.zeros(self.out_channels, dtype=np.float32)

        if tuple(self.weights.shape) != self.weight_shape:
            raise ShapeError(
                "\n Weight dims {} do not match expected {} \n".format(
                    tuple(self.weights.shape), self.weight_shape
                )
            )
        if tuple(self.bias.shape) != (self.out_channels,):
            raise ShapeError(
                "\n Bias dims {} do not match ({},) \n".format(
                    tuple(self.bias.shape), self.out_channels
                )
            )

    @property
    def weight_shape(self):
        return (self.out_channels, self.in_channels) + self.kernel


@dataclass
class Deconv3dParams(Conv3dParams):
    @property
    def weight_shape(self):
        # [in, out, kL, kH, kW]: the layout of the convolution it is the adjoint of
        return (self.in_channels, self.out_channels) + self.kernel


@dataclass
class Pool3dParams(Geometry):
    def __post_init__(self):
        super().__post_init__()
        if self.pad != (0, 0, 0):
            raise ShapeError("\n Max pooling does not support padding \n")


@dataclass
class PoolArgmax:
    indices: np.ndarray
    input_shape: Tuple[int, ...]
