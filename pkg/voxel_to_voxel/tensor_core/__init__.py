# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

from .tensor import tensor_new, check_dims, flat_index, is_finite, DTYPE
from .tensor_file import (
    tensor_write,
    tensor_read,
    tensor_to_bytes,
    tensor_from_bytes,
)
from .checkpoint import (
    checkpoint_save,
    checkpoint_load,
    checkpoint_to_bytes,
    checkpoint_from_bytes,
)

__all__ = [
    "tensor_new",
    "check_dims",
    "flat_index",
    "is_finite",
    "DTYPE",
    "tensor_write",
    "tensor_read",
    "tensor_to_bytes",
    "tensor_from_bytes",
    "checkpoint_save",
    "checkpoint_load",
    "checkpoint_to_bytes",
    "checkpoint_from_bytes",
]
