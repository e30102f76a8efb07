# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

import logging
import numpy as np

from dataclasses import dataclass
from sklearn.metrics import confusion_matrix

from .losses import check_labels, IGNORE_LABEL
from ..errors import ShapeError


def _check_pair(pred, gt, n_channels, name):
    if np.shape(pred) != np.shape(gt):
        raise ShapeError(
            "\n {}: prediction dims {} do not match ground truth dims {} \n".format(
                name, np.shape(pred), np.shape(gt)
            )
        )
    if np.ndim(pred) != 4 or np.shape(pred)[0] != n_channels:
        raise ShapeError(
            "\n {} expects ({}, L, H, W) tensors, got {} \n".format(
                name, n_channels, np.shape(pred)
            )
        )


def endpoint_errors(pred_flow, gt_flow):
    _check_pair(pred_flow, gt_flow, 2, "epe")
    diff = np.asarray(pred_flow, dtype=np.float64) - gt_flow
    return np.sqrt(diff[0] ** 2 + diff[1] ** 2)


def color_distances(pred_rgb, gt_rgb):
    _check_pair(pred_rgb, gt_rgb, 3, "ade")
    pred = np.clip(np.asarray(pred_rgb, dtype=np.float64), 0, 1)
    gt = np.clip(np.asarray(gt_rgb, dtype=np.float64), 0, 1)
    return np.sqrt(((pred - gt) ** 2).sum(axis=0))


def epe(pred_flow, gt_flow):
    """Mean endpoint error in pixels per frame (unscaled flow units)."""
    return float(endpoint_errors(pred_flow, gt_flow).mean())


def ade(pred_rgb, gt_rgb):
    """Mean RGB distance, both sides clamped to [0, 1]."""
    return float(color_distances(pred_rgb, gt_rgb).mean())


@dataclass
class ConfusionMatrix:
    """K x K counts, rows are ground truth classes, columns predictions."""

    counts: np.ndarray

    @classmethod
    def empty(cls, n_classes):
        return cls(np.zeros((n_classes, n_classes), dtype=np.int64))

    @property
    def total(self):
        return int(self.counts.sum())

    @property
    def accuracy(self):
        if self.total == 0:
            logging.warning("Confusion matrix holds no scored voxels")
            return float("nan")
        return float(np.trace(self.counts) / self.total)

    def __add__(self, other):
        return ConfusionMatrix(self.counts + other.counts)


def predict_classes(logits):
    # argmax ties resolve to the lowest class index
    return np.argmax(logits, axis=0)


def seg_accuracy(pred_logits, labels, ignore_label=IGNORE_LABEL):
    if np.ndim(pred_logits) < 2 or np.shape(pred_logits)[1:] != np.shape(labels):
        raise ShapeError(
            "\n seg_accuracy: logits {} and labels {} disagree on (L, H, W) \n".format(
                np.shape(pred_logits), np.shape(labels)
            )
        )
    n_classes = pred_logits.shape[0]
    labels = check_labels(labels, n_classes, ignore_label)

    scored = labels != ignore_label
    predicted = predict_classes(pred_logits)

    counts = confusion_matrix(
        labels[scored], predicted[scored], labels=np.arange(n_classes)
    )
    cm = ConfusionMatrix(counts.astype(np.int64))
    return cm.accuracy, cm
