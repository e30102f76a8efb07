# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

from .horn_schunck import (
    horn_schunck,
    HSParams,
    FlowField,
    image_derivatives,
    constancy_residual,
    warp,
)
from .labeling import teacher_label_clip, label_dataset, TEACHER_MANIFEST

__all__ = [
    "horn_schunck",
    "HSParams",
    "FlowField",
    "image_derivatives",
    "constancy_residual",
    "warp",
    "teacher_label_clip",
    "label_dataset",
    "TEACHER_MANIFEST",
]
