# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

import time
import numpy as np
import pandas as pd

from dataclasses import dataclass
from typing import Optional
from tqdm import tqdm

from .clip_sampler import cover_clips
from .trainer import network_from_config
from .video_data import VideoDataset
from ..networks import SEGMENTATION, FLOW, COLOR, forward, bind_checkpoint
from ..losses_metrics import (
    ConfusionMatrix,
    seg_accuracy,
    endpoint_errors,
    color_distances,
)
from ..tensor_core import checkpoint_load
from ..errors import ShapeError

METRICS = {SEGMENTATION: "accuracy", FLOW: "epe", COLOR: "ade"}


@dataclass
class EvalReport:
    task: str
    metric: str
    value: float
    n_clips: int
    n_voxels: int
    per_clip: pd.DataFrame
    seconds_per_clip: float
    confusion: Optional[ConfusionMatrix] = None

    def text(self):
        lines = [
            "task: {}".format(self.task),
            "clips: {}".format(self.n_clips),
            "scored voxels: {}".format(self.n_voxels),
            "{}: {:.6f}".format(self.metric, self.value),
            "seconds per clip: {:.4f}".format(self.seconds_per_clip),
        ]
        if self.confusion is not None:
            lines.append("confusion matrix (rows: truth, cols: prediction):")
            lines.extend(
                " ".join(str(n) for n in row) for row in self.confusion.counts
            )
        return "\n".join(lines) + "\n"


def predict_clip(g, x):
    prediction, _ = forward(g, x)
    return g.head.from_prediction(prediction)


def predict_video(g, video):
    """
    Prediction for a whole (C, T, H, W) video from non-overlapping clips.
    A trailing remainder comes from one clip aligned to the video end, of
    which only the frames not covered yet are kept.
    """
    video = np.asarray(video)
    C, L, H, W = g.input_shape
    if video.ndim != 4 or video.shape[0] != C or video.shape[2:] != (H, W):
        raise ShapeError(
            "\n predict_video expects ({}, T, {}, {}), got {} \n".format(
                C, H, W, video.shape
            )
        )
    T = video.shape[1]
    if T < L:
        raise ShapeError(
            "\n Video of {} frames is shorter than the clip length {} \n".format(T, L)
        )

    prediction = np.zeros((g.head.out_channels, T, H, W), dtype=np.float32)
    covered = 0
    for start, end in cover_clips(T, L):
        clip_pred = predict_clip(g, video[:, start:end])
        keep = end - covered
        prediction[:, covered:end] = clip_pred[:, L - keep :]
        covered = end
    return prediction


def load_network(cfg, checkpoint):
    g = network_from_config(cfg.check_task())
    bind_checkpoint(g, checkpoint_load(checkpoint))
    return g


def evaluate(checkpoint, manifest, cfg, verbosity=[]):
    """
    Scores a checkpoint on stride-`clip_stride_eval` center-cropped clips.
    The metric is aggregated over all scored voxels of all clips.
    """
    if verbosity is False:
        verbosity = []
    g = load_network(cfg, checkpoint)
    head = g.head
    data = VideoDataset(manifest, head, cfg.input_shape, crop="center")
    windows = data.windows(cfg.clip_stride_eval)

    confusion = ConfusionMatrix.empty(head.out_channels)
    error_sum, n_voxels = 0.0, 0
    rows = []

    t = time.time()
    for window in tqdm(windows, desc="eval", disable="progress_bar" not in verbosity):
        x, target = data.clip(window)
        prediction = predict_clip(g, x)

        if head.variant == SEGMENTATION:
            accuracy, cm = seg_accuracy(prediction, target)
            confusion = confusion + cm
            rows.append((data.videos[window[0]].id, window[1], accuracy, cm.total))
            continue

        if head.variant == FLOW:
            errors = endpoint_errors(prediction, target)
        else:
            errors = color_distances(prediction, target)
        error_sum += float(errors.sum())
        n_voxels += errors.size
        rows.append((data.videos[window[0]].id, window[1], float(errors.mean()), errors.size))
    elapsed = time.time() - t

    metric = METRICS[head.variant]
    if head.variant == SEGMENTATION:
        value, n_voxels = confusion.accuracy, confusion.total
    else:
        value = error_sum / n_voxels
        confusion = None

    per_clip = pd.DataFrame(rows, columns=["id", "start", metric, "n_voxels"])
    return EvalReport(
        task=head.variant,
        metric=metric,
        value=value,
        n_clips=len(windows),
        n_voxels=n_voxels,
        per_clip=per_clip,
        seconds_per_clip=elapsed / len(windows),
        confusion=confusion,
    )
