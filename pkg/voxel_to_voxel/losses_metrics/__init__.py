# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

from .losses import softmax_ce_loss, huber_loss, l2_loss, check_labels, IGNORE_LABEL
from .flow_scaling import FlowScaling, flow_scale, flow_descale, DEFAULT_ALPHA
from .metrics import (
    epe,
    ade,
    endpoint_errors,
    color_distances,
    seg_accuracy,
    predict_classes,
    ConfusionMatrix,
)

__all__ = [
    "softmax_ce_loss",
    "huber_loss",
    "l2_loss",
    "check_labels",
    "IGNORE_LABEL",
    "FlowScaling",
    "flow_scale",
    "flow_descale",
    "DEFAULT_ALPHA",
    "epe",
    "ade",
    "endpoint_errors",
    "color_distances",
    "seg_accuracy",
    "predict_classes",
    "ConfusionMatrix",
]
