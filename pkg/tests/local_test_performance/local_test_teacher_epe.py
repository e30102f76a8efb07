import numpy as np

from voxel_to_voxel.synth_data import SceneSpec, make_dataset
from voxel_to_voxel.teacher_flow import label_dataset


def test_teacher_epe_on_moving_objects(tmp_path):
    scene = SceneSpec(64, 64, 16, n_random_objects=2, max_speed=2)
    manifest = make_dataset(16, scene, 0, str(tmp_path / "data"))

    _, teacher_epe = label_dataset(
        manifest, str(tmp_path / "teacher"), verbosity=["progress_bar"]
    )

    print("\n teacher EPE", teacher_epe)
    assert np.isfinite(teacher_epe)
    assert teacher_epe <= 1.0
