# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

from .config import TrainConfig, PRESETS, load_config, parse_config_text, make_config
from .optimizer import lr_at, sgd_step, clip_gradients
from .clip_sampler import ClipSampler, sample_clips, cover_clips, CLIP_LEN
from .video_data import VideoDataset, load_video
from .trainer import (
    Trainer,
    TrainResult,
    train,
    network_from_config,
    FINAL_CHECKPOINT,
    LOSS_LOG,
)
from .evaluation import (
    EvalReport,
    evaluate,
    predict_clip,
    predict_video,
    load_network,
)
from .results_manager import read_loss_curve

__all__ = [
    "TrainConfig",
    "PRESETS",
    "load_config",
    "parse_config_text",
    "make_config",
    "lr_at",
    "sgd_step",
    "clip_gradients",
    "ClipSampler",
    "sample_clips",
    "cover_clips",
    "CLIP_LEN",
    "VideoDataset",
    "load_video",
    "Trainer",
    "TrainResult",
    "train",
    "network_from_config",
    "FINAL_CHECKPOINT",
    "LOSS_LOG",
    "EvalReport",
    "evaluate",
    "predict_clip",
    "predict_video",
    "load_network",
    "read_loss_curve",
]
