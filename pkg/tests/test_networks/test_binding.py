import pytest
import numpy as np

from voxel_to_voxel.networks import (
    TaskHead,
    build_v2v,
    build_baseline_up,
    init_params,
    bind_checkpoint,
    graph_checkpoint,
)
from voxel_to_voxel.tensor_core import checkpoint_save, checkpoint_load
from voxel_to_voxel.errors import ShapeError

from .._tiny import TINY_SHAPE, TINY_WIDTH

seg8 = TaskHead.segmentation(8)
DECODER = ("deconv5", "conv4c", "deconv4", "conv3c", "deconv3", "conv_pre")


def encoder_checkpoint():
    encoder = build_baseline_up("conv5b", seg8, TINY_SHAPE, TINY_WIDTH)
    init_params(encoder, 11)
    return {
        name: value
        for name, value in encoder.params.items()
        if not name.startswith("conv5b_pre")
    }


def test_bind_encoder_into_v2v():
    entries = encoder_checkpoint()
    g = build_v2v(seg8, TINY_SHAPE, TINY_WIDTH)
    init_params(g, 0)
    decoder_before = g.params["deconv5.w"].copy()

    report = bind_checkpoint(g, entries)

    assert report.loaded == sorted(entries)
    assert report.not_loaded == sorted(n + s for n in DECODER for s in (".w", ".b"))
    assert report.unexpected == []
    assert np.array_equal(g.params["conv1a.w"], entries["conv1a.w"])
    assert np.array_equal(g.params["deconv5.w"], decoder_before)


def test_bind_reports_unexpected():
    g = build_v2v(seg8, TINY_SHAPE, TINY_WIDTH)
    init_params(g, 0)
    entries = dict(graph_checkpoint(g), extra=np.zeros(2, dtype=np.float32))

    report = bind_checkpoint(g, entries)
    assert report.unexpected == ["extra"]
    assert report.not_loaded == []


def test_bind_shape_mismatch():
    g = build_v2v(seg8, TINY_SHAPE, TINY_WIDTH)
    c = g.params["conv1a.w"].shape[0]
    with pytest.raises(ShapeError, match="Shape mismatch on assign"):
        bind_checkpoint(g, {"conv1a.w": np.zeros((c, 3, 5, 5, 5))})


def test_checkpoint_file_round_trip(tmp_path):
    g = build_v2v(seg8, TINY_SHAPE, TINY_WIDTH)
    init_params(g, 5)
    path = str(tmp_path / "g.ckpt")
    checkpoint_save(graph_checkpoint(g), path)

    g_new = build_v2v(seg8, TINY_SHAPE, TINY_WIDTH)
    report = bind_checkpoint(g_new, checkpoint_load(path))

    assert report.not_loaded == [] and report.unexpected == []
    for name in g.params:
        assert g.params[name].tobytes() == g_new.params[name].tobytes()


def test_bind_does_not_alias_entries():
    g = build_v2v(seg8, TINY_SHAPE, TINY_WIDTH)
    entries = {"conv1a.b": np.ones(g.params["conv1a.b"].shape, dtype=np.float32)}
    bind_checkpoint(g, entries)

    entries["conv1a.b"][:] = 5
    assert np.all(g.params["conv1a.b"] == 1)
