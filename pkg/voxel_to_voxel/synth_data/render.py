# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

import math
import numpy as np

from dataclasses import dataclass
from scipy import ndimage

from .scene import place, random_object


@dataclass
class ClipSample:
    clip: np.ndarray
    gt_flow: np.ndarray
    gt_seg: np.ndarray
    gt_color: np.ndarray
    id: str = ""


def _normalized(noise):
    span = noise.max() - noise.min()
    if span == 0:
        return np.full_like(noise, 0.5)
    return (noise - noise.min()) / span


def background_texture(rng, height, width):
    # gray: luma equals every channel
    noise = ndimage.gaussian_filter(rng.standard_normal((height, width)), sigma=4)
    shade = 0.55 + 0.3 * _normalized(noise)
    return np.repeat(shade[None], 3, axis=0)


def object_texture(rng, obj):
    h, w = obj.size
    noise = ndimage.gaussian_filter(rng.standard_normal((h, w)), sigma=1.5)
    shade = 0.7 + 0.3 * _normalized(noise)
    return np.asarray(obj.color)[:, None, None] * shade[None]


def object_mask(obj):
    h, w = obj.size
    if obj.shape == "rect":
        return np.ones((h, w), dtype=bool)
    radius = h / 2
    rows, cols = np.mgrid[0:h, 0:w] + 0.5
    return (rows - radius) ** 2 + (cols - radius) ** 2 <= radius**2


def _paste(canvas_shape, patch, x, y):
    """
    Places a (C, h, w) patch with top-left at (x, y) on a zero canvas.
    Fractional offsets are resampled bilinearly.
    """
    C, h, w = patch.shape
    H, W = canvas_shape
    x0, y0 = math.floor(x), math.floor(y)
    fx, fy = x - x0, y - y0

    # one pixel margin for the bilinear spill of fractional offsets
    layer = np.zeros((C, H + 2, W + 2))
    layer[:, y0 + 1 : y0 + 1 + h, x0 + 1 : x0 + 1 + w] = patch
    if fx or fy:
        layer = ndimage.shift(layer, (0, fy, fx), order=1, mode="constant")
    return layer[:, 1:-1, 1:-1]


def gen_clip(spec, seed):
    """
    Renders a scene back to front. Ground truth follows the topmost object
    at every voxel, noise only touches the input clip.
    """
    rng = np.random.default_rng(seed)
    H, W, L = spec.height, spec.width, spec.frames

    texture_rng = (
        rng if spec.texture_seed is None else np.random.default_rng(spec.texture_seed)
    )
    background = background_texture(texture_rng, H, W)

    objects = list(spec.objects)
    for _ in range(spec.n_random_objects):
        obj = random_object(spec, rng)
        spec.check_object(obj)
        objects.append(obj)

    placed = []
    for obj in objects:
        x, y = place(obj, spec, rng)
        texture = object_texture(rng, obj)
        mask = object_mask(obj)
        placed.append((obj, x, y, np.concatenate([texture * mask, mask[None]])))

    clean = np.repeat(background[:, None], L, axis=1)
    gt_flow = np.zeros((2, L, H, W))
    gt_seg = np.full((L, H, W), spec.background_class, dtype=np.int64)

    for t in range(L):
        for obj, x, y, patch in placed:
            vx, vy = obj.velocity
            layer = _paste((H, W), patch, x + vx * t, y + vy * t)
            alpha = layer[3]

            clean[:, t] = clean[:, t] * (1 - alpha) + layer[:3]
            covered = alpha >= 0.5
            gt_flow[0, t][covered] = vx
            gt_flow[1, t][covered] = vy
            gt_seg[t][covered] = obj.class_id

    clean = np.clip(clean, 0, 1)
    clip = clean
    if spec.noise_std > 0:
        noise = rng.normal(0, spec.noise_std, size=clean.shape)
        clip = np.clip(clean + noise, 0, 1)

    return ClipSample(
        clip=clip.astype(np.float32),
        gt_flow=gt_flow.astype(np.float32),
        gt_seg=gt_seg,
        gt_color=clean.astype(np.float32),
    )
