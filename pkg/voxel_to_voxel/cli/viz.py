# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

import numpy as np
import matplotlib

from matplotlib.colors import hsv_to_rgb
from scipy.special import softmax

from ..losses_metrics import predict_classes
from ..errors import ShapeError

SEG_PALETTE = np.array(
    [
        [0, 0, 0],
        [230, 25, 75],
        [60, 180, 75],
        [255, 225, 25],
        [0, 130, 200],
        [245, 130, 48],
        [145, 30, 180],
        [70, 240, 240],
    ],
    dtype=np.uint8,
)

HEATMAP = "jet"


def to_uint8(rgb):
    return np.round(np.clip(rgb, 0, 1) * 255).astype(np.uint8)


def _frame(tensor, frame, n_channels=None):
    if np.ndim(tensor) != 4 or (n_channels and tensor.shape[0] != n_channels):
        raise ShapeError(
            "\n Expected a ({}, L, H, W) tensor, got {} \n".format(
                n_channels or "K", np.shape(tensor)
            )
        )
    if not 0 <= frame < tensor.shape[1]:
        raise ShapeError(
            "\n Frame {} outside a clip of {} frames \n".format(frame, tensor.shape[1])
        )
    return tensor[:, frame]


def flow_to_rgb(u, v, max_flow=None):
    """
    Color wheel coding: hue is the flow direction, saturation the magnitude
    relative to `max_flow` (default: the largest magnitude), value is 1.
    Zero flow is white.
    """
    u = np.asarray(u, dtype=np.float64)
    v = np.asarray(v, dtype=np.float64)
    magnitude = np.hypot(u, v)
    hue = np.mod(np.arctan2(v, u) / (2 * np.pi), 1.0)

    scale = max_flow if max_flow is not None else magnitude.max()
    if scale > 0:
        saturation = np.clip(magnitude / scale, 0, 1)
    else:
        saturation = np.zeros_like(magnitude)

    hsv = np.stack([hue, saturation, np.ones_like(hue)], axis=-1)
    return to_uint8(hsv_to_rgb(hsv))


def flow_image(flow, frame, max_flow=None):
    u, v = _frame(flow, frame, 2)
    return flow_to_rgb(u, v, max_flow)


def seg_image(logits, frame, class_index=None):
    """Argmax classes in the palette, or the softmax heat map of one class."""
    scores = _frame(logits, frame)
    if class_index is None:
        return SEG_PALETTE[predict_classes(scores) % len(SEG_PALETTE)]

    if not 0 <= class_index < scores.shape[0]:
        raise ShapeError(
            "\n Class {} outside [0, {}) \n".format(class_index, scores.shape[0])
        )
    probability = softmax(np.asarray(scores, dtype=np.float64), axis=0)[class_index]
    colormap = matplotlib.colormaps[HEATMAP]
    return to_uint8(colormap(probability)[..., :3])


def normalize_filter(weights):
    low, high = weights.min(), weights.max()
    if high == low:
        return np.full(weights.shape, 0.5)
    return (weights - low) / (high - low)


def filter_tiles(weights):
    """
    (O, I, kL, kH, kW) filters as (O, kL, kH, kW, 3) RGB tiles, one per
    temporal slice. Three input channels map to RGB, any other count is
    averaged to gray. Each filter is min-max normalized on its own.
    """
    if np.ndim(weights) != 5:
        raise ShapeError(
            "\n Expected conv weights (O, I, kL, kH, kW), got {} \n".format(
                np.shape(weights)
            )
        )
    weights = np.asarray(weights, dtype=np.float64)
    if weights.shape[1] != 3:
        weights = np.repeat(weights.mean(axis=1, keepdims=True), 3, axis=1)

    tiles = np.stack([normalize_filter(w) for w in weights])
    return np.moveaxis(tiles, 1, -1)


def filter_grid(weights, per_row=8, scale=10):
    tiles = filter_tiles(weights)
    O, kL, kH, kW, _ = tiles.shape
    n_rows = -(-O // per_row)

    grid = np.full((n_rows * kH, per_row * kL * kW, 3), 0.5)
    for index in range(O):
        row, col = divmod(index, per_row)
        for t in range(kL):
            top = row * kH
            left = (col * kL + t) * kW
            grid[top : top + kH, left : left + kW] = tiles[index, t]

    grid = np.repeat(np.repeat(grid, scale, axis=0), scale, axis=1)
    return to_uint8(grid)
