# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

from dataclasses import dataclass, field
from typing import Optional, Tuple

from ...nn_ops import Geometry, Conv3dParams, Deconv3dParams, Pool3dParams
from ...errors import ShapeError

CONV3D = "conv3d"
DECONV3D = "deconv3d"
MAXPOOL3D = "maxpool3d"
RELU = "relu"
CONCAT = "concat"
TRILINEAR_UP = "trilinear_up"
CONV2D = "conv2d-per-frame"
DECONV2D = "deconv2d-per-frame"
MAXPOOL2D = "maxpool2d-per-frame"

LAYER_KINDS = (
    CONV3D,
    DECONV3D,
    MAXPOOL3D,
    RELU,
    CONCAT,
    TRILINEAR_UP,
    CONV2D,
    DECONV2D,
    MAXPOOL2D,
)
CONV_KINDS = (CONV3D, CONV2D)
DECONV_KINDS = (DECONV3D, DECONV2D)
POOL_KINDS = (MAXPOOL3D, MAXPOOL2D)
PARAM_KINDS = CONV_KINDS + DECONV_KINDS

INPUT = "data"


def _per_frame(values, fill):
    # 2d layers act on every frame alone: temporal component forced to `fill`
    if isinstance(values, int):
        values = (values, values)
    values = tuple(values)
    if len(values) == 3:
        values = values[1:]
    return (fill,) + values


@dataclass
class LayerSpec:
    name: str
    kind: str
    inputs: Tuple[str, ...]
    kernel: Tuple[int, int, int] = (1, 1, 1)
    stride: Tuple[int, int, int] = (1, 1, 1)
    pad: Tuple[int, int, int] = (0, 0, 0)
    in_channels: int = 0
    out_channels: int = 0
    out_size: Optional[Tuple[int, int, int]] = None
    shape: Tuple[int, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if self.kind not in LAYER_KINDS:
            raise ShapeError("\n Unknown layer kind '{}' \n".format(self.kind))
        self.inputs = tuple(self.inputs)

        if self.kind in (CONV2D, DECONV2D, MAXPOOL2D):
            self.kernel = _per_frame(self.kernel, 1)
            self.stride = _per_frame(self.stride, 1)
            self.pad = _per_frame(self.pad, 0)

        geometry = Geometry(self.kernel, self.stride, self.pad)
        self.kernel, self.stride, self.pad = (
            geometry.kernel,
            geometry.stride,
            geometry.pad,
        )

    @property
    def has_params(self):
        return self.kind in PARAM_KINDS

    @property
    def weight_name(self):
        return self.name + ".w"

    @property
    def bias_name(self):
        return self.name + ".b"

    @property
    def weight_shape(self):
        if self.kind in CONV_KINDS:
            return (self.out_channels, self.in_channels) + self.kernel
        return (self.in_channels, self.out_channels) + self.kernel

    def conv_params(self, params):
        cls_ = Conv3dParams if self.kind in CONV_KINDS else Deconv3dParams
        return cls_(
            kernel=self.kernel,
            stride=self.stride,
            pad=self.pad,
            in_channels=self.in_channels,
            out_channels=self.out_channels,
            weights=params[self.weight_name],
            bias=params[self.bias_name],
        )

    def pool_params(self):
        return Pool3dParams(kernel=self.kernel, stride=self.stride)

    def infer_shape(self, in_shapes):
        """Symbolic forward shape from the shapes of the input layers."""
        if self.kind == CONCAT:
            spatial = {shape[1:] for shape in in_shapes}
            if len(spatial) != 1:
                raise ShapeError(
                    "\n Concat '{}' inputs disagree on (L, H, W): {} \n".format(
                        self.name, in_shapes
                    )
                )
            return (sum(shape[0] for shape in in_shapes),) + in_shapes[0][1:]

        (in_shape,) = in_shapes
        channels, spatial = in_shape[0], in_shape[1:]

        if self.kind == RELU:
            return in_shape

        if self.kind in PARAM_KINDS and channels != self.in_channels:
            raise ShapeError(
                "\n Layer '{}' expects {} input channels, gets {} \n".format(
                    self.name, self.in_channels, channels
                )
            )

        geometry = Geometry(self.kernel, self.stride, self.pad)
        try:
            if self.kind in CONV_KINDS:
                return (self.out_channels,) + geometry.conv_out(spatial)
            elif self.kind in DECONV_KINDS:
                return (self.out_channels,) + geometry.deconv_out(spatial)
            elif self.kind in POOL_KINDS:
                return (channels,) + geometry.pool_out(spatial)
        except ShapeError as err:
            raise ShapeError(
                "\n Shape propagation failed at layer '{}': {} \n".format(self.name, err)
            ) from err

        # trilinear_up
        if any(m < n for n, m in zip(spatial, self.out_size)):
            raise ShapeError(
                "\n Layer '{}' would downsample {} -> {} \n".format(
                    self.name, spatial, self.out_size
                )
            )
        return (channels,) + tuple(self.out_size)
