# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

from .params import (
    Geometry,
    Conv3dParams,
    Deconv3dParams,
    Pool3dParams,
    PoolArgmax,
    conv_out_size,
    deconv_out_size,
    pool_out_size,
)
from .conv import (
    conv3d_forward,
    conv3d_backward,
    deconv3d_forward,
    deconv3d_backward,
)
from .pooling import maxpool3d_forward, maxpool3d_backward
from .activations import (
    relu_forward,
    relu_backward,
    concat_channels,
    concat_channels_backward,
)
from .upsample import interp_matrix, trilinear_upsample, trilinear_upsample_backward
from .gradcheck import gradcheck

__all__ = [
    "Geometry",
    "Conv3dParams",
    "Deconv3dParams",
    "Pool3dParams",
    "PoolArgmax",
    "conv_out_size",
    "deconv_out_size",
    "pool_out_size",
    "conv3d_forward",
    "conv3d_backward",
    "deconv3d_forward",
    "deconv3d_backward",
    "maxpool3d_forward",
    "maxpool3d_backward",
    "relu_forward",
    "relu_backward",
    "concat_channels",
    "concat_channels_backward",
    "interp_matrix",
    "trilinear_upsample",
    "trilinear_upsample_backward",
    "gradcheck",
]
