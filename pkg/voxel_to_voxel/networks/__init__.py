# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

from functools import partial

from .task_head import TaskHead, TASKS, SEGMENTATION, FLOW, COLOR, COLOR_CENTER
from .core_network import (
    NetGraph,
    LayerSpec,
    GraphBuilder,
    forward,
    backward,
    init_params,
    interp_kernel,
    bind_checkpoint,
    graph_checkpoint,
    BindReport,
    INIT_SCHEMES,
)
from .encoder import ENCODER_LEVELS
from .v2v import build_v2v
from .v2v_2d import build_2d_v2v
from .baselines import build_baseline_up
from ..errors import V2VError


ARCHITECTURES = {
    "v2v": build_v2v,
    "conv3b_up": partial(build_baseline_up, "conv3b"),
    "conv4b_up": partial(build_baseline_up, "conv4b"),
    "conv5b_up": partial(build_baseline_up, "conv5b"),
    "v2v_2d": build_2d_v2v,
}


def build_network(architecture, head, input_shape, width_mult=1.0):
    try:
        builder = ARCHITECTURES[architecture]
    except KeyError:
        raise V2VError(
            "\n Unknown architecture '{}', expected one of {} \n".format(
                architecture, list(ARCHITECTURES)
            )
        )
    return builder(head, input_shape, width_mult)


__all__ = [
    "TaskHead",
    "TASKS",
    "SEGMENTATION",
    "FLOW",
    "COLOR",
    "COLOR_CENTER",
    "NetGraph",
    "LayerSpec",
    "GraphBuilder",
    "forward",
    "backward",
    "init_params",
    "interp_kernel",
    "bind_checkpoint",
    "graph_checkpoint",
    "BindReport",
    "INIT_SCHEMES",
    "ENCODER_LEVELS",
    "ARCHITECTURES",
    "build_network",
    "build_v2v",
    "build_2d_v2v",
    "build_baseline_up",
]
