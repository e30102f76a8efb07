# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

from .layer_spec import (
    LayerSpec,
    INPUT,
    CONV3D,
    DECONV3D,
    MAXPOOL3D,
    RELU,
    CONCAT,
    TRILINEAR_UP,
    CONV2D,
    DECONV2D,
    MAXPOOL2D,
    LAYER_KINDS,
)
from .net_graph import NetGraph, ForwardCache, forward, backward
from .graph_builder import GraphBuilder
from .init_params import init_params, interp_kernel, INIT_SCHEMES
from .binding import bind_checkpoint, graph_checkpoint, BindReport

__all__ = [
    "LayerSpec",
    "INPUT",
    "CONV3D",
    "DECONV3D",
    "MAXPOOL3D",
    "RELU",
    "CONCAT",
    "TRILINEAR_UP",
    "CONV2D",
    "DECONV2D",
    "MAXPOOL2D",
    "LAYER_KINDS",
    "NetGraph",
    "ForwardCache",
    "forward",
    "backward",
    "GraphBuilder",
    "init_params",
    "interp_kernel",
    "INIT_SCHEMES",
    "bind_checkpoint",
    "graph_checkpoint",
    "BindReport",
]
