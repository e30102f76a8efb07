import pytest
import numpy as np

from scipy.special import softmax

from voxel_to_voxel.losses_metrics import (
    softmax_ce_loss,
    huber_loss,
    l2_loss,
    flow_scale,
    flow_descale,
    FlowScaling,
    epe,
    ade,
    seg_accuracy,
    ConfusionMatrix,
    IGNORE_LABEL,
)
from voxel_to_voxel.nn_ops import gradcheck
from voxel_to_voxel.errors import LabelError, ShapeError, V2VError

rng = np.random.default_rng(0)


def scalar_layer(loss_fn, *args):
    def layer(x):
        loss, grad = loss_fn(x, *args)
        return np.array(loss), lambda dy: grad * dy

    return layer


@pytest.mark.parametrize("n_classes", [2, 3, 8])
def test_softmax_ce_uniform(n_classes):
    logits = np.zeros((n_classes, 2, 3, 3))
    labels = np.random.default_rng(1).integers(0, n_classes, size=(2, 3, 3))
    loss, _ = softmax_ce_loss(logits, labels)
    assert loss == pytest.approx(np.log(n_classes), abs=1e-6)


def test_softmax_ce_saturated():
    labels = np.random.default_rng(2).integers(0, 4, size=(2, 2, 2))
    logits = np.zeros((4, 2, 2, 2))
    np.put_along_axis(logits, labels[None], 50, axis=0)

    loss, _ = softmax_ce_loss(logits, labels)
    assert loss < 1e-6


def test_softmax_ce_oracle():
    logits = rng.standard_normal((3, 2, 2, 2))
    labels = rng.integers(0, 3, size=(2, 2, 2))

    probs = softmax(logits, axis=0)
    expected = -np.mean(
        [
            np.log(probs[labels[idx]][idx])
            for idx in np.ndindex(labels.shape)
        ]
    )
    loss, _ = softmax_ce_loss(logits, labels)
    assert loss == pytest.approx(expected, abs=1e-6)

    layer = scalar_layer(softmax_ce_loss, labels)
    assert gradcheck(layer, logits) < 1e-3


def test_softmax_ce_ignore_label():
    logits = rng.standard_normal((3, 1, 2, 2))
    labels = np.array([[[0, IGNORE_LABEL], [2, IGNORE_LABEL]]])
    loss, dlogits = softmax_ce_loss(logits, labels)

    assert not dlogits[:, 0, 0, 1].any()
    assert not dlogits[:, 0, 1, 1].any()
    kept, _ = softmax_ce_loss(logits[:, :, :, :1], labels[:, :, :1])
    assert loss == pytest.approx(kept)


def test_softmax_ce_all_ignored():
    loss, dlogits = softmax_ce_loss(np.ones((2, 1, 1, 2)), np.full((1, 1, 2), 255))
    assert loss == 0.0
    assert not dlogits.any()


def test_softmax_ce_label_out_of_range():
    with pytest.raises(LabelError):
        softmax_ce_loss(np.zeros((2, 1, 1, 1)), np.full((1, 1, 1), 2))


def test_softmax_ce_shift_invariant():
    logits = rng.standard_normal((4, 2, 2, 2))
    labels = rng.integers(0, 4, size=(2, 2, 2))
    shift = rng.standard_normal((1, 2, 2, 2)) * 10

    assert softmax_ce_loss(logits, labels)[0] == pytest.approx(
        softmax_ce_loss(logits + shift, labels)[0], abs=1e-5
    )


@pytest.mark.parametrize(
    "residual, value, grad",
    [(0.5, 0.125, 0.5), (2.0, 2.0, 1.0), (-2.0, 2.0, -1.0), (1.0, 0.5, 1.0)],
)
def test_huber_formula(residual, value, grad):
    loss, dpred = huber_loss(np.array([residual]), np.array([0.0]))
    assert loss == pytest.approx(value)
    assert dpred[0] == pytest.approx(grad)


def test_huber_smooth_variant():
    loss, _ = huber_loss(np.array([2.0]), np.array([0.0]), smooth=True)
    assert loss == pytest.approx(1.5)


def test_huber_zero_residual():
    target = rng.standard_normal((2, 2, 3, 3))
    loss, dpred = huber_loss(target.copy(), target)
    assert loss == 0 and not dpred.any()


def test_huber_gradient_bounded():
    pred = rng.standard_normal((2, 2, 4, 4)) * 5
    _, dpred = huber_loss(pred, np.zeros_like(pred))
    assert np.abs(dpred).max() <= 1 / pred.size + 1e-12


def test_huber_shape_mismatch():
    with pytest.raises(ShapeError):
        huber_loss(np.zeros((2, 1, 2, 2)), np.zeros((2, 1, 2, 3)))


def test_l2_values():
    target = rng.standard_normal((3, 2, 2, 2))
    assert l2_loss(target, target)[0] == 0
    assert l2_loss(target + 1, target)[0] == pytest.approx(0.5)


def test_l2_gradcheck():
    target = rng.standard_normal((3, 1, 2, 2))
    layer = scalar_layer(l2_loss, target)
    assert gradcheck(layer, rng.standard_normal(target.shape)) < 1e-4


def test_flow_scaling():
    assert flow_scale(np.array([30.0]))[0] == 2.0
    assert flow_descale(np.array([2.0]))[0] == 30.0
    assert flow_scale(np.array([15.0]), FlowScaling(15))[0] == 1.0
    assert not flow_scale(np.zeros(3)).any()


def test_flow_scaling_round_trip():
    x = (rng.standard_normal(1000) * 20).astype(np.float32)
    back = flow_descale(flow_scale(x))
    np.testing.assert_allclose(back, x, rtol=1e-6)


def test_flow_scaling_invalid_alpha():
    with pytest.raises(V2VError):
        FlowScaling(0)


def test_epe_values():
    gt = rng.standard_normal((2, 2, 3, 3))
    assert epe(gt, gt) == 0
    offset = np.array([3.0, 4.0])[:, None, None, None]
    assert epe(gt + offset, gt) == pytest.approx(5.0)


def test_epe_oracle_symmetric():
    pred = rng.standard_normal((2, 2, 2, 2))
    gt = rng.standard_normal((2, 2, 2, 2))
    expected = np.mean(
        [
            np.hypot(*(pred[:, l, h, w] - gt[:, l, h, w]))
            for l, h, w in np.ndindex(2, 2, 2)
        ]
    )
    assert epe(pred, gt) == pytest.approx(expected, abs=1e-6)
    assert epe(pred, gt) == pytest.approx(epe(gt, pred))


def test_ade_values():
    gt = np.full((3, 2, 2, 2), 0.5)
    assert ade(gt, gt) == 0
    offset = np.array([0.1, 0.0, 0.0])[:, None, None, None]
    assert ade(gt + offset, gt) == pytest.approx(0.1)


def test_ade_clamps():
    gt = np.ones((3, 1, 1, 1))
    assert ade(gt * 3, gt) == 0


def test_ade_oracle():
    pred = rng.random((3, 2, 2, 2))
    gt = rng.random((3, 2, 2, 2))
    expected = np.mean(
        [np.linalg.norm(pred[:, l, h, w] - gt[:, l, h, w]) for l, h, w in np.ndindex(2, 2, 2)]
    )
    assert ade(pred, gt) == pytest.approx(expected, abs=1e-6)


def test_ade_wrong_channels():
    with pytest.raises(ShapeError):
        ade(np.zeros((2, 1, 1, 1)), np.zeros((2, 1, 1, 1)))


def test_seg_accuracy_perfect():
    labels = rng.integers(0, 4, size=(2, 3, 3))
    logits = np.zeros((4, 2, 3, 3))
    np.put_along_axis(logits, labels[None], 1, axis=0)

    accuracy, cm = seg_accuracy(logits, labels)
    assert accuracy == 1.0
    assert np.array_equal(np.diag(np.diag(cm.counts)), cm.counts)
    assert cm.total == labels.size


def test_seg_accuracy_tie_rule():
    accuracy, _ = seg_accuracy(np.zeros((8, 2, 2, 2)), np.zeros((2, 2, 2), dtype=int))
    assert accuracy == 1.0


def test_seg_accuracy_oracle():
    logits = rng.standard_normal((3, 2, 4, 4))
    labels = rng.integers(0, 3, size=(2, 4, 4))
    labels[0, 0, 0] = IGNORE_LABEL

    correct, total = 0, 0
    for idx in np.ndindex(labels.shape):
        if labels[idx] == IGNORE_LABEL:
            continue
        total += 1
        correct += int(np.argmax(logits[(slice(None),) + idx]) == labels[idx])

    accuracy, cm = seg_accuracy(logits, labels)
    assert cm.total == total
    assert accuracy == pytest.approx(correct / total)
    assert accuracy == pytest.approx(seg_accuracy(logits * 3.5, labels)[0])


def test_confusion_matrix_add():
    a = ConfusionMatrix(np.array([[1, 0], [0, 1]]))
    b = ConfusionMatrix(np.array([[0, 2], [0, 0]]))

    merged = a + b
    assert merged.total == 4
    assert merged.accuracy == 0.5


def test_confusion_matrix_empty_is_nan():
    assert np.isnan(ConfusionMatrix.empty(3).accuracy)
