# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

import os
import logging
import numpy as np

from tqdm import tqdm

from .horn_schunck import horn_schunck, HSParams
from ..synth_data import to_grayscale
from ..manifest import read_manifest, write_manifest, MISSING
from ..tensor_core import tensor_read, tensor_write
from ..losses_metrics import endpoint_errors
from ..errors import ShapeError, DatasetError

TEACHER_MANIFEST = "teacher_manifest.txt"


def teacher_label_clip(clip, p=HSParams()):
    """
    (2, L, H, W) flow labels for a clip. The transition t -> t+1 is stored
    at index t, the last frame repeats the field of index L-2.
    """
    clip = np.asarray(clip)
    if clip.ndim != 4 or clip.shape[0] not in (1, 3):
        raise ShapeError(
            "\n teacher_label_clip expects a (1|3, L, H, W) clip, got {} \n".format(
                clip.shape
            )
        )
    gray = to_grayscale(clip)[0] if clip.shape[0] == 3 else clip[0]
    L = gray.shape[0]

    labels = np.zeros((2,) + gray.shape, dtype=np.float32)
    for t in range(L - 1):
        labels[:, t] = horn_schunck(gray[t], gray[t + 1], p).stacked()
    if L > 1:
        labels[:, L - 1] = labels[:, L - 2]
    return labels


def label_dataset(manifest, out_dir, p=HSParams(), verbosity=[]):
    """
    Runs the teacher on every clip of a manifest and writes a sibling
    manifest whose flow column points at the teacher labels. Returns the
    new manifest path and the teacher's EPE against the manifest's own
    flow files.
    """
    if verbosity is False:
        verbosity = []
    entries = read_manifest(manifest)
    if not entries:
        raise DatasetError("\n Manifest '{}' lists no samples \n".format(manifest))
    os.makedirs(out_dir, exist_ok=True)

    labeled = []
    error_sum, n_voxels = 0.0, 0
    for entry in tqdm(
        entries, desc="teacher-flow", disable="progress_bar" not in verbosity
    ):
        labels = teacher_label_clip(tensor_read(entry.clip), p)

        path = os.path.join(out_dir, "{}_teacher_flow.tensor".format(entry.id))
        tensor_write(labels, path)
        labeled.append(entry.with_flow(path))

        if entry.flow != MISSING:
            errors = endpoint_errors(labels, tensor_read(entry.flow))
            error_sum += float(errors.sum())
            n_voxels += errors.size

    teacher_epe = error_sum / n_voxels if n_voxels else float("nan")
    logging.info(
        "Teacher labelled %d clips, EPE vs manifest flow %.4f px",
        len(labeled),
        teacher_epe,
    )
    path = write_manifest(labeled, os.path.join(out_dir, TEACHER_MANIFEST))
    return path, teacher_epe
