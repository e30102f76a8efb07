# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

import struct
import numpy as np

from .tensor import check_dims, DTYPE
from ..errors import FormatError

TENSOR_MAGIC = b"V2VT"
FORMAT_VERSION = 1
DTYPE_F32 = 0

_LE_F32 = np.dtype("<f4")
_HEADER = struct.Struct("<4sBBBB")


def encode_dims(dims):
    return struct.pack("<{}I".format(len(dims)), *dims)


def encode_payload(tensor):
    return np.ascontiguousarray(tensor, dtype=_LE_F32).tobytes()


def decode_payload(buffer, offset, dims):
    n_elements = int(np.prod(dims, dtype=np.int64))
    n_bytes = 4 * n_elements
    if len(buffer) - offset < n_bytes:
        raise FormatError(
            "\n Truncated payload: dims {} need {} bytes, {} available \n".format(
                dims, n_bytes, len(buffer) - offset
            )
        )
    data = np.frombuffer(buffer, dtype=_LE_F32, count=n_elements, offset=offset)
    return data.astype(DTYPE).reshape(dims), offset + n_bytes


def decode_dims(buffer, offset, ndim):
    n_bytes = 4 * ndim
    if len(buffer) - offset < n_bytes:
        raise FormatError("\n Truncated header: missing dims \n")
    dims = struct.unpack_from("<{}I".format(ndim), buffer, offset)
    try:
        dims = check_dims(dims)
    except ValueError as err:
        raise FormatError("\n Invalid dims in file: {} \n".format(err)) from err
    return dims, offset + n_bytes


def tensor_to_bytes(tensor):
    dims = check_dims(np.shape(tensor))
    header = _HEADER.pack(TENSOR_MAGIC, FORMAT_VERSION, DTYPE_F32, len(dims), 0)
    return header + encode_dims(dims) + encode_payload(tensor)


def tensor_from_bytes(buffer):
    if len(buffer) < _HEADER.size:
        raise FormatError("\n Truncated header: file too short \n")

    magic, version, dtype, ndim, _ = _HEADER.unpack_from(buffer, 0)
    if magic != TENSOR_MAGIC:
        raise FormatError(
            "\n Bad magic {!r}, expected {!r} \n".format(magic, TENSOR_MAGIC)
        )
    if version != FORMAT_VERSION:
        raise FormatError("\n Unsupported tensor file version {} \n".format(version))
    if dtype != DTYPE_F32:
        raise FormatError("\n Unsupported tensor dtype code {} \n".format(dtype))

    dims, offset = decode_dims(buffer, _HEADER.size, ndim)
    tensor, offset = decode_payload(buffer, offset, dims)

    if offset != len(buffer):
        raise FormatError(
            "\n Dims/payload mismatch: {} trailing bytes after dims {} \n".format(
                len(buffer) - offset, dims
            )
        )
    return tensor


def tensor_write(tensor, path):
    with open(path, "wb") as f:
        f.write(tensor_to_bytes(tensor))


def tensor_read(path):
    with open(path, "rb") as f:
        buffer = f.read()
    return tensor_from_bytes(buffer)
