# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

import numpy as np

from scipy.special import log_softmax

from ..errors import ShapeError, LabelError

IGNORE_LABEL = 255


def _check_same_dims(pred, target, name):
    if np.shape(pred) != np.shape(target):
        raise ShapeError(
            "\n {}: prediction dims {} do not match target dims {} \n".format(
                name, np.shape(pred), np.shape(target)
            )
        )


def check_labels(labels, n_classes, ignore_label=IGNORE_LABEL):
    labels = np.asarray(labels)
    valid = ((labels >= 0) & (labels < n_classes)) | (labels == ignore_label)
    if not valid.all():
        bad = np.unique(labels[~valid])
        raise LabelError(
            "\n Labels {} out of range [0, {}) (ignore label is {}) \n".format(
                bad[:10].tolist(), n_classes, ignore_label
            )
        )
    return labels.astype(np.int64, copy=False)


def softmax_ce_loss(logits, labels, ignore_label=IGNORE_LABEL):
    """
    Voxelwise softmax cross-entropy, averaged over scored voxels.
    logits: (K, L, H, W), labels: (L, H, W) integer class ids.
    """
    if np.ndim(logits) < 2 or np.shape(logits)[1:] != np.shape(labels):
        raise ShapeError(
            "\n softmax_ce_loss: logits {} and labels {} disagree on (L, H, W) \n".format(
                np.shape(logits), np.shape(labels)
            )
        )
    n_classes = logits.shape[0]
    labels = check_labels(labels, n_classes, ignore_label)

    scored = labels != ignore_label
    n_scored = int(scored.sum())

    log_probs = log_softmax(logits, axis=0)
    dlogits = np.exp(log_probs)

    if n_scored == 0:
        return 0.0, np.zeros_like(logits)

    safe_labels = np.where(scored, labels, 0)
    picked = np.take_along_axis(log_probs, safe_labels[None], axis=0)[0]
    loss = -picked[scored].sum(dtype=np.float64) / n_scored

    onehot = np.zeros_like(dlogits)
    np.put_along_axis(onehot, safe_labels[None], 1, axis=0)
    dlogits = (dlogits - onehot) * scored[None]
    dlogits /= n_scored

    return float(loss), dlogits.astype(logits.dtype, copy=False)


def huber_loss(pred, target_scaled, smooth=False):
    """
    Elementwise Huber loss on flow targets already divided by alpha:
    x^2 / 2 for |x| <= 1, |x| otherwise (|x| - 1/2 with smooth=True).
    """
    _check_same_dims(pred, target_scaled, "huber_loss")

    residual = pred - target_scaled
    magnitude = np.abs(residual)
    quadratic = magnitude <= 1

    linear = magnitude - 0.5 if smooth else magnitude
    values = np.where(quadratic, 0.5 * residual * residual, linear)

    n = residual.size
    loss = values.sum(dtype=np.float64) / n
    dpred = np.where(quadratic, residual, np.sign(residual)) / n

    return float(loss), dpred.astype(pred.dtype, copy=False)


def l2_loss(pred, target):
    _check_same_dims(pred, target, "l2_loss")

    residual = pred - target
    n = residual.size
    loss = 0.5 * np.sum(residual * residual, dtype=np.float64) / n

    return float(loss), (residual / n).astype(pred.dtype, copy=False)
