# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

__version__ = "0.1.0"
__license__ = "MIT"

from .errors import (
    V2VError,
    DimensionError,
    ShapeError,
    FormatError,
    LabelError,
    DatasetError,
    ConfigError,
    SceneError,
)
from .networks import TaskHead, build_network, ARCHITECTURES
from .manifest import ManifestEntry, read_manifest, write_manifest
from .trainer import TrainConfig, load_config, train, evaluate, predict_video


__all__ = [
    "V2VError",
    "DimensionError",
    "ShapeError",
    "FormatError",
    "LabelError",
    "DatasetError",
    "ConfigError",
    "SceneError",
    "TaskHead",
    "build_network",
    "ARCHITECTURES",
    "ManifestEntry",
    "read_manifest",
    "write_manifest",
    "TrainConfig",
    "load_config",
    "train",
    "evaluate",
    "predict_video",
]
