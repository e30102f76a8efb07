# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

from dataclasses import dataclass

from ..losses_metrics import (
    softmax_ce_loss,
    huber_loss,
    l2_loss,
    FlowScaling,
    DEFAULT_ALPHA,
    flow_scale,
    flow_descale,
)
from ..errors import V2VError

SEGMENTATION = "seg"
FLOW = "flow"
COLOR = "color"

TASKS = (SEGMENTATION, FLOW, COLOR)

# the network regresses rgb - COLOR_CENTER
COLOR_CENTER = 0.5


@dataclass(frozen=True)
class TaskHead:
    """
    Fixes the prediction channels K and the loss of a network.
    Segmentation predicts K class logits, flow predicts (u, v) divided by
    alpha, coloring predicts (r, g, b) - COLOR_CENTER from a single
    grayscale channel. `to_target` and `from_prediction` map between ground
    truth and network output.
    """

    variant: str
    n_classes: int = 8
    alpha: float = DEFAULT_ALPHA
    huber_smooth: bool = False

    def __post_init__(self):
        if self.variant not in TASKS:
            raise V2VError(
                "\n Unknown task '{}', expected one of {} \n".format(self.variant, TASKS)
            )
        if self.variant == SEGMENTATION and self.n_classes < 1:
            raise V2VError("\n Segmentation needs at least one class \n")
        FlowScaling(self.alpha)

    @classmethod
    def segmentation(cls, n_classes):
        return cls(SEGMENTATION, n_classes=n_classes)

    @classmethod
    def flow(cls, alpha=DEFAULT_ALPHA, smooth=False):
        return cls(FLOW, alpha=alpha, huber_smooth=smooth)

    @classmethod
    def color(cls):
        return cls(COLOR)

    @property
    def out_channels(self):
        if self.variant == SEGMENTATION:
            return self.n_classes
        elif self.variant == FLOW:
            return 2
        return 3

    @property
    def in_channels(self):
        return 1 if self.variant == COLOR else 3

    @property
    def scaling(self):
        return FlowScaling(self.alpha)

    def to_target(self, ground_truth):
        if self.variant == FLOW:
            return flow_scale(ground_truth, self.scaling)
        elif self.variant == COLOR:
            return ground_truth - COLOR_CENTER
        return ground_truth

    def from_prediction(self, prediction):
        if self.variant == FLOW:
            return flow_descale(prediction, self.scaling)
        elif self.variant == COLOR:
            return prediction + COLOR_CENTER
        return prediction

    def loss(self, prediction, target):
        """target is ground truth after `to_target`."""
        if self.variant == SEGMENTATION:
            return softmax_ce_loss(prediction, target)
        elif self.variant == FLOW:
            return huber_loss(prediction, target, smooth=self.huber_smooth)
        return l2_loss(prediction, target)
