# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

import math

from .layer_spec import (
    LayerSpec,
    INPUT,
    CONV3D,
    DECONV3D,
    MAXPOOL3D,
    RELU,
    CONCAT,
    TRILINEAR_UP,
)
from .net_graph import NetGraph
from ...tensor_core import check_dims
from ...errors import ShapeError


class GraphBuilder:
    """
    Collects layers in topological order. Every layer is shape-checked the
    moment it is added, so a finished builder always describes a valid DAG.
    """

    def __init__(self, input_shape, width_mult=1.0):
        input_shape = tuple(int(n) for n in input_shape)
        if len(input_shape) != 4:
            raise ShapeError(
                "\n Network input must be (C, L, H, W), got {} \n".format(input_shape)
            )
        check_dims(input_shape)
        if not width_mult > 0:
            raise ShapeError("\n width_mult must be > 0, got {} \n".format(width_mult))

        self.input_shape = input_shape
        self.width_mult = width_mult
        self.layers = []
        self._shapes = {INPUT: input_shape}

    def width(self, channels):
        return max(1, math.ceil(channels * self.width_mult))

    def shape(self, name):
        return self._shapes[name]

    def add(self, layer):
        if layer.name in self._shapes:
            raise ShapeError("\n Duplicate layer name '{}' \n".format(layer.name))
        for name in layer.inputs:
            if name not in self._shapes:
                raise ShapeError(
                    "\n Layer '{}' reads unknown input '{}' \n".format(layer.name, name)
                )

        layer.shape = layer.infer_shape([self._shapes[name] for name in layer.inputs])
        self._shapes[layer.name] = layer.shape
        self.layers.append(layer)
        return layer.name

    def conv(
        self,
        name,
        source,
        out_channels,
        kernel=3,
        stride=1,
        pad=1,
        kind=CONV3D,
        relu=True,
    ):
        self.add(
            LayerSpec(
                name=name,
                kind=kind,
                inputs=(source,),
                kernel=kernel,
                stride=stride,
                pad=pad,
                in_channels=self._shapes[source][0],
                out_channels=out_channels,
            )
        )
        if relu:
            return self.add(LayerSpec(name=name + "_relu", kind=RELU, inputs=(name,)))
        return name

    def deconv(self, name, source, out_channels, kernel, stride, pad, kind=DECONV3D):
        return self.conv(
            name, source, out_channels, kernel, stride, pad, kind=kind, relu=True
        )

    def pool(self, name, source, kernel, stride=None, kind=MAXPOOL3D):
        return self.add(
            LayerSpec(
                name=name,
                kind=kind,
                inputs=(source,),
                kernel=kernel,
                stride=kernel if stride is None else stride,
            )
        )

    def concat(self, name, sources):
        return self.add(LayerSpec(name=name, kind=CONCAT, inputs=tuple(sources)))

    def upsample(self, name, source, out_size):
        return self.add(
            LayerSpec(
                name=name,
                kind=TRILINEAR_UP,
                inputs=(source,),
                out_size=tuple(out_size),
            )
        )

    def build(self, head, architecture):
        expected = (head.out_channels,) + self.input_shape[1:]
        if not self.layers or self.layers[-1].shape != expected:
            raise ShapeError(
                "\n Prediction dims {} differ from the required {} \n".format(
                    self.layers[-1].shape if self.layers else None, expected
                )
            )

        g = NetGraph(
            layers=list(self.layers),
            head=head,
            input_shape=self.input_shape,
            architecture=architecture,
        )
        g.zero_params()
        return g
