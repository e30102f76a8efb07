# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

import numpy as np

from .layer_spec import DECONV_KINDS
from ...errors import V2VError

HE = "he"
HE_TRILINEAR_DECONV = "he+trilinear-deconv"

INIT_SCHEMES = (HE, HE_TRILINEAR_DECONV)


def interp_kernel(kernel):
    """
    Separable linear interpolation filter for a transposed convolution.
    With stride k // 2 and pad k // 4 it reproduces half-pixel
    linear upsampling away from the borders.
    """
    axes = []
    for k in kernel:
        factor = (k + 1) // 2
        center = factor - 1 if k % 2 == 1 else factor - 0.5
        axes.append(1 - np.abs(np.arange(k) - center) / factor)
    return np.einsum("i,j,k->ijk", *axes)


def _fan_in(layer):
    receptive = int(np.prod(layer.kernel))
    if layer.kind in DECONV_KINDS:
        # an output voxel of a transposed conv sees kernel / stride taps per channel
        return layer.in_channels * receptive / int(np.prod(layer.stride))
    return layer.in_channels * receptive


def init_params(g, seed, scheme=HE):
    if scheme not in INIT_SCHEMES:
        raise V2VError(
            "\n Unknown init scheme '{}', expected one of {} \n".format(
                scheme, INIT_SCHEMES
            )
        )
    rng = np.random.default_rng(seed)

    params = {}
    for layer in g.param_layers:
        std = np.sqrt(2.0 / _fan_in(layer))
        weights = rng.standard_normal(layer.weight_shape) * std

        if scheme == HE_TRILINEAR_DECONV and layer.kind in DECONV_KINDS:
            weights = np.zeros(layer.weight_shape)
            kernel = interp_kernel(layer.kernel)
            for c in range(min(layer.in_channels, layer.out_channels)):
                weights[c, c] = kernel

        params[layer.weight_name] = weights.astype(np.float32)
        params[layer.bias_name] = np.zeros(layer.out_channels, dtype=np.float32)

    g.params = params
