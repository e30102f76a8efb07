# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

from .main import main, build_parser
from .ppm import ppm_write, ppm_read, ppm_to_bytes, ppm_from_bytes
from .viz import flow_to_rgb, flow_image, seg_image, filter_grid, SEG_PALETTE
from .checks import run_gradchecks, layer_suite

__all__ = [
    "main",
    "build_parser",
    "ppm_write",
    "ppm_read",
    "ppm_to_bytes",
    "ppm_from_bytes",
    "flow_to_rgb",
    "flow_image",
    "seg_image",
    "filter_grid",
    "SEG_PALETTE",
    "run_gradchecks",
    "layer_suite",
]
