# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

import struct
import numpy as np

from collections.abc import Mapping

from .tensor import check_dims
from .tensor_file import (
    FORMAT_VERSION,
    encode_dims,
    encode_payload,
    decode_dims,
    decode_payload,
)
from ..errors import FormatError

CHECKPOINT_MAGIC = b"V2VC"

_HEADER = struct.Struct("<4sBI")


def _entry_items(entries):
    if isinstance(entries, Mapping):
        items = list(entries.items())
    else:
        items = list(entries)

    seen = set()
    for name, _ in items:
        if not isinstance(name, str):
            raise FormatError("\n Checkpoint names must be str, got {!r} \n".format(name))
        if name in seen:
            raise FormatError("\n Duplicate checkpoint entry name '{}' \n".format(name))
        seen.add(name)

    return sorted(items, key=lambda item: item[0])


def checkpoint_to_bytes(entries):
    items = _entry_items(entries)

    chunks = [_HEADER.pack(CHECKPOINT_MAGIC, FORMAT_VERSION, len(items))]
    for name, tensor in items:
        name_bytes = name.encode("utf-8")
        dims = check_dims(np.shape(tensor))

        chunks.append(struct.pack("<H", len(name_bytes)))
        chunks.append(name_bytes)
        chunks.append(struct.pack("<B", len(dims)))
        chunks.append(encode_dims(dims))
        chunks.append(encode_payload(tensor))

    return b"".join(chunks)


def checkpoint_from_bytes(buffer):
    if len(buffer) < _HEADER.size:
        raise FormatError("\n Truncated checkpoint header \n")

    magic, version, entry_count = _HEADER.unpack_from(buffer, 0)
    if magic != CHECKPOINT_MAGIC:
        raise FormatError(
            "\n Bad magic {!r}, expected {!r} \n".format(magic, CHECKPOINT_MAGIC)
        )
    if version != FORMAT_VERSION:
        raise FormatError("\n Unsupported checkpoint version {} \n".format(version))

    offset = _HEADER.size
    entries = {}
    for _ in range(entry_count):
        if len(buffer) - offset < 2:
            raise FormatError("\n Truncated checkpoint entry header \n")
        (name_len,) = struct.unpack_from("<H", buffer, offset)
        offset += 2

        if len(buffer) - offset < name_len + 1:
            raise FormatError("\n Truncated checkpoint entry name \n")
        raw_name = bytes(buffer[offset : offset + name_len])
        try:
            name = raw_name.decode("utf-8")
        except UnicodeDecodeError:
            raise FormatError(
                "\n Checkpoint entry name {!r} is not valid utf-8 \n".format(raw_name)
            )
        offset += name_len

        if name in entries:
            raise FormatError("\n Duplicate checkpoint entry name '{}' \n".format(name))

        (ndim,) = struct.unpack_from("<B", buffer, offset)
        offset += 1

        dims, offset = decode_dims(buffer, offset, ndim)
        entries[name], offset = decode_payload(buffer, offset, dims)

    if offset != len(buffer):
        raise FormatError(
            "\n {} trailing bytes after {} checkpoint entries \n".format(
                len(buffer) - offset, entry_count
            )
        )
    return entries


def checkpoint_save(entries, path):
    with open(path, "wb") as f:
        f.write(checkpoint_to_bytes(entries))


def checkpoint_load(path):
    with open(path, "rb") as f:
        buffer = f.read()
    return checkpoint_from_bytes(buffer)
