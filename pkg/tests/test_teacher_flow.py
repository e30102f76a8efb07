import os
import pytest
import numpy as np

from voxel_to_voxel.teacher_flow import (
    horn_schunck,
    HSParams,
    teacher_label_clip,
    label_dataset,
    TEACHER_MANIFEST,
)
from voxel_to_voxel.synth_data import SceneSpec, gen_clip
from voxel_to_voxel.manifest import read_manifest, write_manifest
from voxel_to_voxel.tensor_core import tensor_read
from voxel_to_voxel.errors import ShapeError, DatasetError, V2VError

from ._tiny import tiny_dataset

rng = np.random.default_rng(0)


def ridge(shift=0.0, size=32, sigma=3.0):
    x = np.arange(size) - (size - 1) / 2 - shift
    row = np.exp(-(x**2) / (2 * sigma**2))
    return np.tile(row, (size, 1))


def blob(dx=0.0, dy=0.0, size=32, sigma=3.0):
    x = np.arange(size) - (size - 1) / 2
    cols = np.exp(-((x - dx) ** 2) / (2 * sigma**2))
    rows = np.exp(-((x - dy) ** 2) / (2 * sigma**2))
    return np.outer(rows, cols)


def test_identical_frames_zero_flow():
    frame = rng.random((16, 16))
    flow = horn_schunck(frame, frame)

    assert not flow.u.any()
    assert not flow.v.any()


def test_ridge_shift_x():
    flow = horn_schunck(ridge(0), ridge(1))
    support = ridge(0) > 0.1

    assert 0.7 <= flow.u[support].mean() <= 1.3
    assert not flow.v.any()


def test_ridge_shift_y():
    flow = horn_schunck(ridge(0).T, ridge(1).T)
    support = ridge(0).T > 0.1

    assert 0.7 <= flow.v[support].mean() <= 1.3
    assert not flow.u.any()


@pytest.mark.parametrize("dx, dy", [(1, 0), (0, 1)])
def test_blob_translation(dx, dy):
    flow = horn_schunck(blob(), blob(dx, dy))
    support = blob() > 0.1
    along, across = (flow.u, flow.v) if dx else (flow.v, flow.u)

    assert 0.5 <= along[support].mean() <= 1.5
    assert -0.3 <= across[support].mean() <= 0.3


@pytest.mark.parametrize("levels", [1, 2, 3])
def test_pyramid_levels_run(levels):
    flow = horn_schunck(ridge(0), ridge(1), HSParams(pyramid_levels=levels))
    support = ridge(0) > 0.1

    assert flow.u.shape == (32, 32)
    assert np.isfinite(flow.u).all()
    assert 0.5 <= flow.u[support].mean() <= 1.5


def test_residual_decreases():
    residuals = []
    horn_schunck(ridge(0), ridge(1), HSParams(iterations=50), residuals)

    assert len(residuals) == 51
    assert residuals[-1] < residuals[0]


def test_horn_schunck_deterministic():
    a, b = rng.random((2, 16, 16))
    first = horn_schunck(a, b)
    second = horn_schunck(a, b)

    assert first.u.tobytes() == second.u.tobytes()
    assert first.v.tobytes() == second.v.tobytes()
    assert first.u.dtype == np.float32


def test_horn_schunck_bad_frames():
    with pytest.raises(ShapeError):
        horn_schunck(np.zeros((4, 4)), np.zeros((4, 5)))
    with pytest.raises(ShapeError):
        horn_schunck(np.zeros((2, 4, 4)), np.zeros((2, 4, 4)))


@pytest.mark.parametrize(
    "kwargs", [{"smoothness": 0}, {"iterations": 0}, {"pyramid_levels": 0}]
)
def test_hs_params_invalid(kwargs):
    with pytest.raises(V2VError):
        HSParams(**kwargs)


def test_label_clip_shape_and_last_frame():
    clip = rng.random((3, 4, 12, 12)).astype(np.float32)
    labels = teacher_label_clip(clip, HSParams(iterations=10))

    assert labels.shape == (2, 4, 12, 12)
    assert labels.dtype == np.float32
    assert np.array_equal(labels[:, 3], labels[:, 2])


def test_label_clip_static_is_zero():
    frame = rng.random((3, 1, 12, 12))
    clip = np.repeat(frame, 5, axis=1)
    assert not teacher_label_clip(clip).any()


def test_label_clip_gray_input():
    clip = np.stack([ridge(t) for t in range(3)])[None]
    labels = teacher_label_clip(clip)

    assert labels.shape == (2, 3, 32, 32)
    assert labels[0].mean() > 0


def test_label_clip_flow_bounded():
    sample = gen_clip(SceneSpec(32, 32, 4, n_random_objects=2, noise_std=0.02), 0)
    labels = teacher_label_clip(sample.clip)

    assert np.isfinite(labels).all()
    assert np.abs(labels).max() <= 32 + 32


def test_label_clip_wrong_channels():
    with pytest.raises(ShapeError):
        teacher_label_clip(np.zeros((2, 3, 8, 8)))


def test_label_dataset(tmp_path):
    manifest = tiny_dataset(tmp_path / "data", n=2)
    path, teacher_epe = label_dataset(manifest, str(tmp_path / "teacher"), HSParams(iterations=20))

    assert os.path.basename(path) == TEACHER_MANIFEST
    source = read_manifest(manifest)
    labeled = read_manifest(path)

    assert len(labeled) == 2
    for before, after in zip(source, labeled):
        assert after.id == before.id
        assert after.clip == before.clip
        assert after.flow != before.flow
        assert tensor_read(after.flow).shape == (2, 8, 16, 16)
    assert np.isfinite(teacher_epe) and teacher_epe >= 0


def test_label_dataset_empty(tmp_path):
    manifest = write_manifest([], str(tmp_path / "empty.txt"))
    with pytest.raises(DatasetError):
        label_dataset(manifest, str(tmp_path / "out"))
