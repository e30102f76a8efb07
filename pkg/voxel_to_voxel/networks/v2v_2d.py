# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

from .core_network import GraphBuilder
from .encoder import add_c3d_encoder
from .v2v import add_v2v_decoder, check_divisible


def build_2d_v2v(head, input_shape, width_mult=1.0):
    """
    Same topology as V2V with every op applied to each frame on its own.
    The clip length is unconstrained since nothing pools over time.
    """
    b = GraphBuilder(input_shape, width_mult)
    check_divisible(b.input_shape, 1, 16)

    encoder = add_c3d_encoder(b, planar=True)
    add_v2v_decoder(b, encoder, head, planar=True)
    return b.build(head, "v2v_2d")
