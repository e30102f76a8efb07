# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

import re
import numpy as np

from ..errors import FormatError

_HEADER = re.compile(rb"P6\s+(\d+)\s+(\d+)\s+(\d+)\s")


def ppm_to_bytes(pixels):
    """Binary PPM of an (H, W, 3) uint8 image."""
    pixels = np.asarray(pixels)
    if pixels.ndim != 3 or pixels.shape[2] != 3 or pixels.dtype != np.uint8:
        raise FormatError(
            "\n PPM images are (H, W, 3) uint8, got {} {} \n".format(
                pixels.shape, pixels.dtype
            )
        )
    H, W, _ = pixels.shape
    header = "P6\n{} {}\n255\n".format(W, H).encode("ascii")
    return header + np.ascontiguousarray(pixels).tobytes()


def ppm_from_bytes(buffer):
    match = _HEADER.match(buffer)
    if match is None:
        raise FormatError("\n Not a binary PPM (P6) image \n")
    W, H, max_value = (int(g) for g in match.groups())
    if max_value != 255:
        raise FormatError("\n Only 8-bit PPM images are supported \n")

    payload = buffer[match.end() :]
    if len(payload) != 3 * W * H:
        raise FormatError(
            "\n PPM payload holds {} bytes, {}x{} needs {} \n".format(
                len(payload), W, H, 3 * W * H
            )
        )
    return np.frombuffer(payload, dtype=np.uint8).reshape(H, W, 3)


def ppm_write(pixels, path):
    with open(path, "wb") as f:
        f.write(ppm_to_bytes(pixels))
    return path


def ppm_read(path):
    with open(path, "rb") as f:
        return ppm_from_bytes(f.read())
