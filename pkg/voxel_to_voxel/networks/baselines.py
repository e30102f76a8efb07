# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

from .core_network import GraphBuilder
from .encoder import add_c3d_encoder, ENCODER_LEVELS
from ..errors import ShapeError


def build_baseline_up(level, head, input_shape, width_mult=1.0):
    """
    Encoder cut at `level`, a 3x3x3 prediction conv named `<level>_pre`
    and a trilinear upsampling back to the input grid.
    """
    if level not in ENCODER_LEVELS:
        raise ShapeError(
            "\n Unknown baseline level '{}', expected one of {} \n".format(
                level, ENCODER_LEVELS
            )
        )
    b = GraphBuilder(input_shape, width_mult)

    encoder = add_c3d_encoder(b, until=level)
    pre = b.conv(level + "_pre", encoder[level], head.out_channels, relu=False)
    b.upsample(level + "_up", pre, b.input_shape[1:])
    return b.build(head, level + "_up")
