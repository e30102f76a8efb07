# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

import numpy as np

from dataclasses import dataclass
from scipy import ndimage

from ..errors import ShapeError, V2VError

# derivatives are taken on 8-bit intensities so that a smoothness of ~1
# weighs against image gradients the way the classic formulation does
INTENSITY_SCALE = 255.0

NEIGHBOR_MEAN = np.array([[0, 1, 0], [1, 0, 1], [0, 1, 0]]) / 4.0


@dataclass(frozen=True)
class HSParams:
    smoothness: float = 1.0
    iterations: int = 100
    pyramid_levels: int = 1

    def __post_init__(self):
        if not self.smoothness > 0:
            raise V2VError(
                "\n Horn-Schunck smoothness must be > 0, got {} \n".format(
                    self.smoothness
                )
            )
        if self.iterations < 1 or self.pyramid_levels < 1:
            raise V2VError(
                "\n Horn-Schunck needs iterations >= 1 and pyramid_levels >= 1 \n"
            )


@dataclass
class FlowField:
    u: np.ndarray
    v: np.ndarray

    def stacked(self):
        return np.stack([self.u, self.v]).astype(np.float32)


def image_derivatives(frame_a, frame_b):
    # spatial: central differences of the frame mean; temporal: forward difference
    mean = (frame_a + frame_b) / 2
    Iy, Ix = np.gradient(mean)
    It = frame_b - frame_a
    return Ix, Iy, It


def neighbor_mean(field):
    return ndimage.convolve(field, NEIGHBOR_MEAN, mode="nearest")


def constancy_residual(Ix, Iy, It, u, v):
    return float(np.abs(Ix * u + Iy * v + It).mean())


def _jacobi(frame_a, frame_b, smoothness, iterations, residuals=None):
    Ix, Iy, It = image_derivatives(frame_a, frame_b)
    denominator = smoothness**2 + Ix**2 + Iy**2

    u = np.zeros_like(frame_a)
    v = np.zeros_like(frame_a)
    if residuals is not None:
        residuals.append(constancy_residual(Ix, Iy, It, u, v))

    for _ in range(iterations):
        u_bar = neighbor_mean(u)
        v_bar = neighbor_mean(v)
        step = (Ix * u_bar + Iy * v_bar + It) / denominator
        u = u_bar - Ix * step
        v = v_bar - Iy * step

        if residuals is not None:
            residuals.append(constancy_residual(Ix, Iy, It, u, v))
    return u, v


def _downsample(frame):
    # 2x2 block average, odd sizes repeat their last row/column
    H, W = frame.shape
    frame = np.pad(frame, ((0, H % 2), (0, W % 2)), mode="edge")
    return frame.reshape(frame.shape[0] // 2, 2, frame.shape[1] // 2, 2).mean(
        axis=(1, 3)
    )


def _resize(field, shape):
    H, W = field.shape
    rows = (np.arange(shape[0]) + 0.5) * H / shape[0] - 0.5
    cols = (np.arange(shape[1]) + 0.5) * W / shape[1] - 0.5
    grid = np.meshgrid(rows, cols, indexing="ij")
    return ndimage.map_coordinates(field, grid, order=1, mode="nearest")


def warp(frame, u, v):
    """Samples `frame` at (x + u, y + v), bilinear, border values repeated."""
    rows, cols = np.indices(frame.shape, dtype=np.float64)
    return ndimage.map_coordinates(frame, [rows + v, cols + u], order=1, mode="nearest")


def horn_schunck(frame_a, frame_b, p=HSParams(), residuals=None):
    """
    Dense flow from frame_a to frame_b with Jacobi iterations on the
    Horn-Schunck equations. With more than one pyramid level the flow is
    estimated coarse to fine: each level warps frame_b by the upsampled
    coarser flow and solves for the remaining increment.
    `residuals`, if a list, collects the mean brightness-constancy residual
    before the first and after every iteration of the finest level.
    """
    frame_a = np.asarray(frame_a, dtype=np.float64)
    frame_b = np.asarray(frame_b, dtype=np.float64)
    if frame_a.ndim != 2 or frame_a.shape != frame_b.shape:
        raise ShapeError(
            "\n horn_schunck expects two frames of equal (H, W), got {} and {} \n".format(
                frame_a.shape, frame_b.shape
            )
        )
    frame_a = frame_a * INTENSITY_SCALE
    frame_b = frame_b * INTENSITY_SCALE

    pyramid = [(frame_a, frame_b)]
    for _ in range(p.pyramid_levels - 1):
        a, b = pyramid[-1]
        if min(a.shape) < 2:
            break
        pyramid.append((_downsample(a), _downsample(b)))

    u = np.zeros_like(pyramid[-1][0])
    v = np.zeros_like(pyramid[-1][0])
    for level, (a, b) in enumerate(reversed(pyramid)):
        if level > 0:
            scale_y = a.shape[0] / u.shape[0]
            scale_x = a.shape[1] / u.shape[1]
            u = _resize(u, a.shape) * scale_x
            v = _resize(v, a.shape) * scale_y

        finest = level == len(pyramid) - 1
        if level > 0:
            b = warp(b, u, v)
        du, dv = _jacobi(
            a, b, p.smoothness, p.iterations, residuals if finest else None
        )
        u, v = u + du, v + dv

    return FlowField(u.astype(np.float32), v.astype(np.float32))
