# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

import logging
import numpy as np

from dataclasses import dataclass

from .clip_sampler import sample_clips
from ..manifest import read_manifest, MISSING
from ..networks import SEGMENTATION, FLOW, COLOR
from ..synth_data import to_grayscale
from ..tensor_core import tensor_read
from ..errors import DatasetError

TARGET_COLUMNS = {SEGMENTATION: "seg", FLOW: "flow", COLOR: "color"}


@dataclass
class Video:
    id: str
    inputs: np.ndarray
    target: np.ndarray

    @property
    def n_frames(self):
        return self.inputs.shape[1]


def _read(path, sample_id, column):
    if path == MISSING:
        raise DatasetError(
            "\n Sample '{}' has no {} ground truth in the manifest \n".format(
                sample_id, column
            )
        )
    return tensor_read(path)


def load_video(entry, head):
    clip = tensor_read(entry.clip)
    if clip.ndim != 4 or clip.shape[0] != 3:
        raise DatasetError(
            "\n Sample '{}': clip must be (3, L, H, W), got {} \n".format(
                entry.id, clip.shape
            )
        )
    column = TARGET_COLUMNS[head.variant]
    target = _read(getattr(entry, column), entry.id, column)

    if head.variant == SEGMENTATION:
        expected = clip.shape[1:]
    elif head.variant == FLOW:
        expected = (2,) + clip.shape[1:]
    else:
        expected = clip.shape

    if target.shape != expected:
        raise DatasetError(
            "\n Sample '{}': {} ground truth dims {} do not fit clip dims {} \n".format(
                entry.id, column, target.shape, clip.shape
            )
        )

    if head.variant == SEGMENTATION:
        if np.any(target != np.round(target)):
            raise DatasetError(
                "\n Sample '{}': segmentation labels are not integral \n".format(entry.id)
            )
        target = np.round(target).astype(np.int64)
    inputs = to_grayscale(clip) if head.variant == COLOR else clip
    return Video(entry.id, inputs, target)


class VideoDataset:
    """
    Videos of a manifest with the task's network input and target. Clips are
    windows of `input_shape`'s length, cropped to its (H, W).
    """

    def __init__(self, manifest, head, input_shape, crop="center"):
        entries = read_manifest(manifest)
        if not entries:
            raise DatasetError("\n Manifest '{}' lists no samples \n".format(manifest))

        self.head = head
        self.input_shape = tuple(input_shape)
        self.crop = crop
        self.videos = [load_video(entry, head) for entry in entries]

        _, _, h, w = self.input_shape
        for video in self.videos:
            _, _, H, W = video.inputs.shape
            if H < h or W < w:
                raise DatasetError(
                    "\n Sample '{}' frames {}x{} are smaller than the network input {}x{} \n".format(
                        video.id, H, W, h, w
                    )
                )

    @property
    def clip_len(self):
        return self.input_shape[1]

    def windows(self, stride):
        windows = []
        for index, video in enumerate(self.videos):
            clips = sample_clips(video.n_frames, stride, self.clip_len)
            if not clips:
                logging.warning(
                    "Sample '%s' has %d frames, fewer than the clip length %d, skipped",
                    video.id,
                    video.n_frames,
                    self.clip_len,
                )
            windows.extend((index, start) for start, _ in clips)

        if not windows:
            raise DatasetError(
                "\n No clip of {} frames fits any sample \n".format(self.clip_len)
            )
        return windows

    def _offsets(self, H, W, rng):
        _, _, h, w = self.input_shape
        if self.crop == "random" and rng is not None:
            return int(rng.integers(0, H - h + 1)), int(rng.integers(0, W - w + 1))
        return (H - h) // 2, (W - w) // 2

    def clip(self, window, rng=None):
        index, start = window
        video = self.videos[index]
        _, _, H, W = video.inputs.shape
        _, L, h, w = self.input_shape
        top, left = self._offsets(H, W, rng)

        frames = slice(start, start + L)
        rows = slice(top, top + h)
        cols = slice(left, left + w)

        inputs = video.inputs[:, frames, rows, cols]
        target = video.target[..., frames, rows, cols]
        return np.ascontiguousarray(inputs), np.ascontiguousarray(target)
