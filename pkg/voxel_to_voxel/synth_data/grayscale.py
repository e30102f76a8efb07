# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

import numpy as np

from ..errors import ShapeError

# Rec.601 luma
LUMA_WEIGHTS = np.array([0.299, 0.587, 0.114])


def to_grayscale(clip):
    if np.ndim(clip) != 4 or np.shape(clip)[0] != 3:
        raise ShapeError(
            "\n to_grayscale expects a (3, L, H, W) clip, got dims {} \n".format(
                np.shape(clip)
            )
        )
    gray = np.tensordot(LUMA_WEIGHTS, np.asarray(clip, dtype=np.float64), axes=1)
    return gray[None].astype(np.float32)
