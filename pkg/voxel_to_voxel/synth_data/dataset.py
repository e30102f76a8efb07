# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

import os
import numpy as np

from tqdm import tqdm

from .render import gen_clip
from ..manifest import ManifestEntry, write_manifest
from ..tensor_core import tensor_write

MANIFEST_NAME = "manifest.txt"


def sample_seeds(seed, n):
    return [
        int(child.generate_state(1)[0])
        for child in np.random.SeedSequence(seed).spawn(n)
    ]


def write_sample(sample, out_dir):
    paths = {}
    for column, tensor in (
        ("clip", sample.clip),
        ("flow", sample.gt_flow),
        ("seg", sample.gt_seg.astype(np.float32)),
        ("color", sample.gt_color),
    ):
        paths[column] = os.path.join(out_dir, "{}_{}.tensor".format(sample.id, column))
        tensor_write(tensor, paths[column])
    return ManifestEntry(sample.id, **paths)


def make_dataset(n, template, seed, out_dir, verbosity=[]):
    """
    Renders `n` clips from one scene template and writes them as tensor
    files next to a manifest. Ids carry the dataset seed, so datasets built
    with different seeds never collide.
    """
    if verbosity is False:
        verbosity = []
    os.makedirs(out_dir, exist_ok=True)

    entries = []
    seeds = sample_seeds(seed, n)
    for i, sample_seed in enumerate(
        tqdm(seeds, desc="make-data", disable="progress_bar" not in verbosity)
    ):
        sample = gen_clip(template, sample_seed)
        sample.id = "clip_{}_{:05d}".format(seed, i)
        entries.append(write_sample(sample, out_dir))

    return write_manifest(entries, os.path.join(out_dir, MANIFEST_NAME))
