# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

import math
import numpy as np

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from ..errors import SceneError

SHAPES = ("rect", "disk")
MAX_SPEED = 4


@dataclass
class SceneObject:
    """
    A textured shape moving at constant velocity (vx, vy) in px/frame.
    `size` is (height, width) of the bounding box, a disk uses its height
    as diameter. `position` is the top-left corner (x, y) on frame 0;
    None lets the renderer draw one that keeps the object on the canvas.
    """

    shape: str
    size: Tuple[int, int]
    velocity: Tuple[float, float]
    class_id: int
    color: Tuple[float, float, float]
    position: Optional[Tuple[float, float]] = None

    def __post_init__(self):
        if self.shape not in SHAPES:
            raise SceneError(
                "\n Unknown object shape '{}', expected one of {} \n".format(
                    self.shape, SHAPES
                )
            )
        self.size = tuple(int(n) for n in self.size)
        if self.shape == "disk":
            self.size = (self.size[0], self.size[0])
        if min(self.size) < 1:
            raise SceneError("\n Object size must be positive, got {} \n".format(self.size))
        if max(abs(v) for v in self.velocity) > MAX_SPEED:
            raise SceneError(
                "\n Object velocity {} exceeds {} px/frame \n".format(
                    self.velocity, MAX_SPEED
                )
            )
        if not all(0.0 <= c <= 1.0 for c in self.color):
            raise SceneError("\n Object color {} outside [0, 1] \n".format(self.color))


@dataclass
class SceneSpec:
    height: int
    width: int
    frames: int
    objects: List[SceneObject] = field(default_factory=list)
    n_classes: int = 8
    background_class: int = 0
    texture_seed: Optional[int] = None
    noise_std: float = 0.0
    subpixel: bool = False
    n_random_objects: int = 0
    max_speed: int = 2

    def __post_init__(self):
        if min(self.height, self.width, self.frames) < 1:
            raise SceneError(
                "\n Scene dims must be positive: {}x{}x{} \n".format(
                    self.frames, self.height, self.width
                )
            )
        if not 0 <= self.background_class < self.n_classes:
            raise SceneError(
                "\n Background class {} outside [0, {}) \n".format(
                    self.background_class, self.n_classes
                )
            )
        if self.noise_std < 0:
            raise SceneError("\n noise_std must be >= 0 \n")
        for obj in self.objects:
            self.check_object(obj)

    def check_object(self, obj):
        if not 0 <= obj.class_id < self.n_classes:
            raise SceneError(
                "\n Object class {} outside [0, {}) \n".format(obj.class_id, self.n_classes)
            )
        if not self.subpixel and any(float(v) != int(v) for v in obj.velocity):
            raise SceneError(
                "\n Sub-pixel velocity {} needs subpixel rendering \n".format(
                    obj.velocity
                )
            )


def start_range(extent, size, velocity, frames):
    """Admissible frame-0 coordinates keeping [x, x + size) inside the canvas."""
    travel = velocity * (frames - 1)
    low = max(0.0, -travel)
    high = min(extent - size, extent - size - travel)
    return math.ceil(low), math.floor(high)


def place(obj, spec, rng):
    """Frame-0 top-left (x, y) of an object; given positions are clamped."""
    h, w = obj.size
    vx, vy = obj.velocity
    x_range = start_range(spec.width, w, vx, spec.frames)
    y_range = start_range(spec.height, h, vy, spec.frames)

    if x_range[0] > x_range[1] or y_range[0] > y_range[1]:
        raise SceneError(
            "\n Object of size {} moving {} cannot stay on a {}x{} canvas for {} frames \n".format(
                obj.size, obj.velocity, spec.height, spec.width, spec.frames
            )
        )

    if obj.position is None:
        x = int(rng.integers(x_range[0], x_range[1] + 1))
        y = int(rng.integers(y_range[0], y_range[1] + 1))
    else:
        x = int(np.clip(obj.position[0], *x_range))
        y = int(np.clip(obj.position[1], *y_range))
    return x, y


def class_color(class_id):
    """Base color shared by every random object of a class."""
    palette_rng = np.random.default_rng(class_id)
    return tuple(float(c) for c in 0.1 + 0.8 * palette_rng.random(3))


def random_object(spec, rng):
    side = min(spec.height, spec.width)
    min_size = max(2, side // 8)
    max_size = max(min_size, side // 3)

    reach = spec.frames - 1
    if reach > 0:
        speed = min(spec.max_speed, MAX_SPEED, (side - min_size) // reach)
    else:
        speed = spec.max_speed
    speed = max(speed, 0)

    vx, vy = (int(v) for v in rng.integers(-speed, speed + 1, size=2))
    room = min(spec.width - abs(vx) * reach, spec.height - abs(vy) * reach)
    size = int(rng.integers(min_size, max(min_size, min(max_size, room)) + 1))

    shape = SHAPES[int(rng.integers(len(SHAPES)))]
    classes = [c for c in range(spec.n_classes) if c != spec.background_class]
    class_id = int(rng.choice(classes)) if classes else spec.background_class
    color = class_color(class_id)

    return SceneObject(shape, (size, size), (vx, vy), class_id, color)
