# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

from dataclasses import dataclass

from ..errors import V2VError

DEFAULT_ALPHA = 15.0


@dataclass(frozen=True)
class FlowScaling:
    alpha: float = DEFAULT_ALPHA

    def __post_init__(self):
        if not self.alpha > 0:
            raise V2VError("\n Flow scaling alpha must be > 0, got {} \n".format(self.alpha))


def flow_scale(flow, scaling=FlowScaling()):
    return flow / scaling.alpha


def flow_descale(pred, scaling=FlowScaling()):
    return pred * scaling.alpha
