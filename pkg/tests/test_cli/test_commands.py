import os
import numpy as np

from voxel_to_voxel.cli import main
from voxel_to_voxel.cli.main import EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_IO
from voxel_to_voxel.manifest import read_manifest
from voxel_to_voxel.tensor_core import tensor_read, checkpoint_save

from .._tiny import TINY_WIDTH

TINY_FLAGS = ["--input-shape", "3,8,16,16", "--width-mult", str(TINY_WIDTH)]


def make_data(out, *extra):
    argv = ["--quiet", "make-data", "--n", "1", "--height", "16", "--width", "16"]
    argv += ["--frames", "8", "--objects", "1", "--out", str(out)] + list(extra)
    assert main(argv) == EXIT_OK
    return str(out / "manifest.txt")


def train_tiny(tmp_path, manifest, *extra):
    out_dir = tmp_path / "run"
    argv = ["--quiet", "train", "--manifest", manifest, "--max-iters", "1"]
    argv += ["--out-dir", str(out_dir)] + TINY_FLAGS + list(extra)
    return main(argv), str(out_dir / "final.ckpt")


def test_make_data(tmp_path, capsys):
    manifest = make_data(tmp_path / "a")

    assert capsys.readouterr().out.strip() == manifest
    assert len(read_manifest(manifest)) == 1


def test_make_data_reproducible(tmp_path):
    make_data(tmp_path / "a", "--seed", "4")
    make_data(tmp_path / "b", "--seed", "4")

    for name in os.listdir(tmp_path / "a"):
        with open(tmp_path / "a" / name, "rb") as fa, open(tmp_path / "b" / name, "rb") as fb:
            assert fa.read() == fb.read()


def test_missing_required_flag():
    assert main(["make-data", "--n", "1"]) == EXIT_USAGE


def test_unknown_command():
    assert main(["fit"]) == EXIT_USAGE


def test_scene_error_exit_code(tmp_path):
    argv = ["--quiet", "make-data", "--n", "1", "--classes", "0", "--out", str(tmp_path)]
    assert main(argv) == EXIT_DATA


def test_teacher_flow_static(tmp_path, capsys):
    manifest = make_data(tmp_path / "data", "--objects", "0")
    argv = ["--quiet", "teacher-flow", "--manifest", manifest, "--iters", "10"]
    assert main(argv + ["--out", str(tmp_path / "teacher")]) == EXIT_OK

    assert "teacher EPE vs ground truth: 0.0000 px" in capsys.readouterr().out
    (entry,) = read_manifest(str(tmp_path / "teacher" / "teacher_manifest.txt"))
    assert not tensor_read(entry.flow).any()


def test_train_and_eval(tmp_path, capsys):
    manifest = make_data(tmp_path / "data")
    code, checkpoint = train_tiny(tmp_path, manifest)

    assert code == EXIT_OK
    assert os.path.isfile(checkpoint)
    assert "final loss:" in capsys.readouterr().out

    argv = ["--quiet", "eval", "--ckpt", checkpoint, "--manifest", manifest] + TINY_FLAGS
    assert main(argv) == EXIT_OK
    assert "accuracy: " in capsys.readouterr().out


def test_train_config_file(tmp_path):
    manifest = make_data(tmp_path / "data")
    config = tmp_path / "run.cfg"
    config.write_text(
        "task = seg\nmax_iters = 1\ninput_shape = 3, 8, 16, 16\nwidth_mult = 0.125\n"
        "out_dir = {}\nmanifest = {}\n".format(tmp_path / "run", manifest)
    )
    assert main(["--quiet", "train", "--config", str(config)]) == EXIT_OK
    assert os.path.isfile(tmp_path / "run" / "final.ckpt")


def test_train_invalid_config(tmp_path):
    manifest = make_data(tmp_path / "data")
    code, _ = train_tiny(tmp_path, manifest, "--base-lr", "-1")
    assert code == EXIT_USAGE


def test_train_init_mismatch(tmp_path):
    manifest = make_data(tmp_path / "data")
    init = str(tmp_path / "init.ckpt")
    checkpoint_save({"conv1a.w": np.zeros((1, 3, 5, 5, 5), dtype=np.float32)}, init)

    code, _ = train_tiny(tmp_path, manifest, "--init", init)
    assert code == EXIT_DATA


def test_missing_checkpoint_file(tmp_path):
    manifest = make_data(tmp_path / "data")
    argv = ["--quiet", "eval", "--ckpt", str(tmp_path / "nope.ckpt"), "--manifest", manifest]
    assert main(argv + TINY_FLAGS) == EXIT_IO


def test_predict_flow(tmp_path):
    manifest = make_data(tmp_path / "data", "--height", "20", "--width", "20")
    code, checkpoint = train_tiny(tmp_path, manifest, "--task", "flow")
    assert code == EXIT_OK

    (entry,) = read_manifest(manifest)
    out = str(tmp_path / "pred.tensor")
    argv = ["--quiet", "predict", "--task", "flow", "--ckpt", checkpoint]
    argv += ["--clip", entry.clip, "--out", out] + TINY_FLAGS
    assert main(argv) == EXIT_OK

    prediction = tensor_read(out)
    assert prediction.shape == (2, 8, 16, 16)
    assert np.isfinite(prediction).all()


def test_gradcheck_command(capsys):
    assert main(["gradcheck", "--samples", "16"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "conv3d.w" in out and "softmax_ce" in out


def test_gradcheck_command_fails_on_tight_tolerance():
    assert main(["gradcheck", "--samples", "8", "--tol", "0", "--eps", "0.5"]) == EXIT_DATA
