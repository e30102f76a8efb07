# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

from .scene import SceneSpec, SceneObject, SHAPES, MAX_SPEED, class_color
from .render import ClipSample, gen_clip
from .grayscale import to_grayscale, LUMA_WEIGHTS
from .dataset import make_dataset, MANIFEST_NAME

__all__ = [
    "SceneSpec",
    "SceneObject",
    "SHAPES",
    "MAX_SPEED",
    "class_color",
    "ClipSample",
    "gen_clip",
    "to_grayscale",
    "LUMA_WEIGHTS",
    "make_dataset",
    "MANIFEST_NAME",
]
