# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

from .core_network import (
    INPUT,
    CONV3D,
    CONV2D,
    MAXPOOL3D,
    MAXPOOL2D,
)

ENCODER_LEVELS = ("conv3b", "conv4b", "conv5b")

# (stage, conv widths, pool kernel after the stage)
C3D_STAGES = (
    (1, (64,), (1, 2, 2)),
    (2, (128,), (2, 2, 2)),
    (3, (256, 256), (2, 2, 2)),
    (4, (512, 512), (2, 2, 2)),
    (5, (512, 512), None),
)


def add_c3d_encoder(b, until="conv5b", planar=False):
    """
    Adds the C3D convolution stack conv1a ... `until` to the builder and
    returns {layer name: post-relu output name} for every conv layer.
    With `planar` every op runs per frame and pool1 is no special case.
    """
    conv_kind = CONV2D if planar else CONV3D
    pool_kind = MAXPOOL2D if planar else MAXPOOL3D

    outputs = {}
    source = INPUT
    for stage, widths, pool in C3D_STAGES:
        for sub, channels in zip("ab", widths):
            name = "conv{}{}".format(stage, sub)
            source = b.conv(name, source, b.width(channels), kind=conv_kind)
            outputs[name] = source
            if name == until:
                return outputs
        if pool is not None:
            source = b.pool("pool{}".format(stage), source, pool, kind=pool_kind)
    return outputs
