import pytest
import numpy as np

from voxel_to_voxel.networks import TaskHead, build_v2v, init_params, forward


heads = (
    "head",
    [
        (TaskHead.segmentation(8)),
        (TaskHead.flow()),
        (TaskHead.color()),
    ],
)


@pytest.mark.parametrize(*heads)
def test_full_scale_forward(head):
    input_shape = (head.in_channels, 16, 112, 112)
    g = build_v2v(head, input_shape, width_mult=0.25)
    init_params(g, 0)

    x = np.random.default_rng(0).random(input_shape).astype(np.float32)
    prediction, cache = forward(g, x)

    assert cache.outputs["conv5b"].shape == (128, 2, 7, 7)
    assert cache.outputs["deconv5"].shape == (64, 4, 14, 14)
    assert prediction.shape == (head.out_channels, 16, 112, 112)
    assert np.isfinite(prediction).all()
