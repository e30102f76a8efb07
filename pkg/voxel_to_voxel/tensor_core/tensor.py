# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

"""
Tensors are plain C-ordered numpy arrays. Video data uses the dim order
(C, L, H, W): channels, frames, height, width. There is no batch dim.
"""

import numpy as np

from functools import reduce

from ..errors import DimensionError

DTYPE = np.float32
MAX_RANK = 5
MAX_ELEMENTS = 2**31


def check_dims(dims):
    dims = tuple(int(d) for d in dims)

    if len(dims) == 0:
        raise DimensionError("\n Tensor dims must not be empty \n")
    if len(dims) > MAX_RANK:
        raise DimensionError(
            "\n Tensor rank {} exceeds the maximum rank of {} \n".format(
                len(dims), MAX_RANK
            )
        )
    for dim in dims:
        if dim < 1:
            raise DimensionError(
                "\n All tensor dims must be >= 1, got {} \n".format(dims)
            )

    n_elements = reduce((lambda x, y: x * y), dims)
    if n_elements > MAX_ELEMENTS:
        raise DimensionError(
            "\n Tensor with dims {} has {} elements, limit is {} \n".format(
                dims, n_elements, MAX_ELEMENTS
            )
        )
    return dims


def tensor_new(dims, fill=0.0):
    dims = check_dims(dims)
    return np.full(dims, fill, dtype=DTYPE)


def flat_index(dims, index):
    # row-major, last dim fastest
    flat = 0
    for dim, idx in zip(dims, index):
        flat = flat * dim + idx
    return flat


def is_finite(tensor):
    return bool(np.isfinite(tensor).all())
