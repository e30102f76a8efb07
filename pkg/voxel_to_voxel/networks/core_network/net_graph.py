# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

import numpy as np

from functools import reduce
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from .layer_spec import (
    LayerSpec,
    INPUT,
    CONCAT,
    RELU,
    TRILINEAR_UP,
    CONV_KINDS,
    DECONV_KINDS,
    POOL_KINDS,
)
from ..task_head import TaskHead
from ...nn_ops import (
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
)
from ...errors import ShapeError


@dataclass
class NetGraph:
    layers: List[LayerSpec]
    head: TaskHead
    input_shape: Tuple[int, int, int, int]
    params: Dict[str, np.ndarray] = field(default_factory=dict, repr=False)
    architecture: str = "v2v"

    @property
    def output(self):
        return self.layers[-1].name

    @property
    def output_shape(self):
        return self.layers[-1].shape

    @property
    def shapes(self):
        return {layer.name: layer.shape for layer in self.layers}

    def layer(self, name):
        for layer in self.layers:
            if layer.name == name:
                return layer
        raise KeyError(name)

    @property
    def param_layers(self):
        return [layer for layer in self.layers if layer.has_params]

    @property
    def param_shapes(self):
        shapes = {}
        for layer in self.param_layers:
            shapes[layer.weight_name] = layer.weight_shape
            shapes[layer.bias_name] = (layer.out_channels,)
        return shapes

    @property
    def n_params(self):
        return int(sum(np.prod(shape) for shape in self.param_shapes.values()))

    def zero_params(self):
        self.params = {
            name: np.zeros(shape, dtype=np.float32)
            for name, shape in self.param_shapes.items()
        }


@dataclass
class ForwardCache:
    outputs: Dict[str, np.ndarray] = field(default_factory=dict)
    argmax: Dict[str, object] = field(default_factory=dict)


def forward(g, x):
    x = np.asarray(x)
    if not np.issubdtype(x.dtype, np.floating):
        x = x.astype(np.float32)
    if tuple(x.shape) != tuple(g.input_shape):
        raise ShapeError(
            "\n Network expects input dims {}, got {} \n".format(
                tuple(g.input_shape), tuple(x.shape)
            )
        )

    cache = ForwardCache()
    cache.outputs[INPUT] = x

    for layer in g.layers:
        inputs = [cache.outputs[name] for name in layer.inputs]

        if layer.kind in CONV_KINDS:
            y = conv3d_forward(inputs[0], layer.conv_params(g.params))
        elif layer.kind in DECONV_KINDS:
            y = deconv3d_forward(inputs[0], layer.conv_params(g.params))
        elif layer.kind in POOL_KINDS:
            y, cache.argmax[layer.name] = maxpool3d_forward(
                inputs[0], layer.pool_params()
            )
        elif layer.kind == RELU:
            y = relu_forward(inputs[0])
        elif layer.kind == CONCAT:
            y = reduce(concat_channels, inputs)
        elif layer.kind == TRILINEAR_UP:
            y = trilinear_upsample(inputs[0], layer.out_size)

        cache.outputs[layer.name] = y

    return cache.outputs[g.output], cache


def _accumulate(dacts, name, grad):
    if name == INPUT:
        return
    if name in dacts:
        dacts[name] = dacts[name] + grad
    else:
        dacts[name] = grad


def backward(g, cache, dprediction, stop_gradient=()):
    """
    Reverse pass over the topological layer list. Layers consumed twice
    (the skip sources) sum the gradients of both consumers. Layers named in
    `stop_gradient` pass nothing upstream.
    """
    dprediction = np.asarray(dprediction)
    if dprediction.shape != cache.outputs[g.output].shape:
        raise ShapeError(
            "\n Prediction gradient dims {} do not match output dims {} \n".format(
                dprediction.shape, cache.outputs[g.output].shape
            )
        )
    stop_gradient = frozenset(stop_gradient)

    grads = {
        name: np.zeros(shape, dtype=g.params[name].dtype)
        for name, shape in g.param_shapes.items()
    }
    dacts = {g.output: dprediction}

    for layer in reversed(g.layers):
        dy = dacts.pop(layer.name, None)
        if dy is None or layer.name in stop_gradient:
            continue

        inputs = [cache.outputs[name] for name in layer.inputs]

        if layer.kind in CONV_KINDS:
            dx, dw, db = conv3d_backward(inputs[0], layer.conv_params(g.params), dy)
            grads[layer.weight_name] = dw
            grads[layer.bias_name] = db
            dxs = [dx]
        elif layer.kind in DECONV_KINDS:
            dx, dw, db = deconv3d_backward(
                inputs[0], layer.conv_params(g.params), dy
            )
            grads[layer.weight_name] = dw
            grads[layer.bias_name] = db
            dxs = [dx]
        elif layer.kind in POOL_KINDS:
            dxs = [maxpool3d_backward(cache.argmax[layer.name], dy)]
        elif layer.kind == RELU:
            dxs = [relu_backward(inputs[0], dy)]
        elif layer.kind == CONCAT:
            dxs = []
            for x in inputs[:-1]:
                dx, dy = concat_channels_backward(dy, x.shape[0])
                dxs.append(dx)
            dxs.append(dy)
        elif layer.kind == TRILINEAR_UP:
            dxs = [trilinear_upsample_backward(inputs[0].shape, dy)]

        for name, dx in zip(layer.inputs, dxs):
            _accumulate(dacts, name, dx)

    return grads
