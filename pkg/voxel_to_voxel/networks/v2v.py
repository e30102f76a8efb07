# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

from .core_network import GraphBuilder, CONV3D, DECONV3D, CONV2D, DECONV2D
from .encoder import add_c3d_encoder
from ..errors import ShapeError


def check_divisible(input_shape, temporal, spatial):
    _, L, H, W = input_shape
    if L % temporal or H % spatial or W % spatial:
        raise ShapeError(
            "\n Indivisible input shape {}: L must divide by {}, H and W by {} \n".format(
                tuple(input_shape), temporal, spatial
            )
        )


def add_v2v_decoder(b, encoder, head, planar=False):
    conv_kind = CONV2D if planar else CONV3D
    deconv_kind = DECONV2D if planar else DECONV3D

    deconv5 = b.deconv(
        "deconv5", encoder["conv5b"], b.width(256), 4, 2, 1, kind=deconv_kind
    )
    conv4c = b.conv("conv4c", encoder["conv4b"], b.width(256), kind=conv_kind)
    concat4 = b.concat("concat4", (deconv5, conv4c))

    deconv4 = b.deconv("deconv4", concat4, b.width(128), 4, 2, 1, kind=deconv_kind)
    conv3c = b.conv("conv3c", encoder["conv3b"], b.width(128), kind=conv_kind)
    concat3 = b.concat("concat3", (deconv4, conv3c))

    # x2 over time, x4 over space
    deconv3 = b.deconv(
        "deconv3",
        concat3,
        b.width(64),
        kernel=(4, 8, 8),
        stride=(2, 4, 4),
        pad=(1, 2, 2),
        kind=deconv_kind,
    )
    return b.conv("conv_pre", deconv3, head.out_channels, kind=conv_kind, relu=False)


def build_v2v(head, input_shape, width_mult=1.0):
    b = GraphBuilder(input_shape, width_mult)
    check_divisible(b.input_shape, 8, 16)

    encoder = add_c3d_encoder(b)
    add_v2v_decoder(b, encoder, head)
    return b.build(head, "v2v")
