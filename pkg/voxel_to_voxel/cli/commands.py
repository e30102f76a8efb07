# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

import numpy as np

from .ppm import ppm_write
from .viz import flow_image, seg_image, filter_grid
from .checks import run_gradchecks
from ..synth_data import SceneSpec, make_dataset, to_grayscale
from ..teacher_flow import HSParams, label_dataset
from ..trainer import (
    TrainConfig,
    load_config,
    train,
    evaluate,
    load_network,
    predict_video,
)
from ..trainer.config import fields_of
from ..networks import COLOR
from ..tensor_core import tensor_read, tensor_write, checkpoint_load
from ..errors import ShapeError, V2VError

CONFIG_KEYS = fields_of(TrainConfig)


def config_overrides(args):
    """One flag per config key: --base-lr overrides base_lr."""
    overrides = {}
    for key in CONFIG_KEYS:
        value = getattr(args, key, None)
        if value is None:
            continue
        if key == "input_shape":
            value = tuple(part.strip() for part in value.split(","))
        overrides[key] = value
    return overrides


def resolve_config(args):
    overrides = config_overrides(args)
    if args.config is not None:
        return load_config(args.config, **overrides)
    return TrainConfig.preset(overrides.pop("task", "seg"), **overrides)


def make_data(args):
    template = SceneSpec(
        height=args.height,
        width=args.width,
        frames=args.frames,
        n_classes=args.classes,
        n_random_objects=args.objects,
        max_speed=args.max_speed,
        noise_std=args.noise,
    )
    manifest = make_dataset(args.n, template, args.seed, args.out, args.verbosity)
    print(manifest)
    return 0


def teacher_flow(args):
    params = HSParams(
        smoothness=args.smoothness, iterations=args.iters, pyramid_levels=args.levels
    )
    manifest, teacher_epe = label_dataset(args.manifest, args.out, params, args.verbosity)
    print(manifest)
    print("teacher EPE vs ground truth: {:.4f} px".format(teacher_epe))
    return 0


def train_cmd(args):
    cfg = resolve_config(args)
    result = train(cfg, args.manifest, verbosity=args.verbosity)
    print("checkpoint: {}".format(result.checkpoint))
    print("loss log: {}".format(result.loss_log))
    print("final loss: {}".format(result.final_loss))
    return 0


def eval_cmd(args):
    cfg = resolve_config(args)
    manifest = args.manifest or cfg.manifest
    if manifest is None:
        raise V2VError("\n eval needs --manifest or a 'manifest' config key \n")
    report = evaluate(args.ckpt, manifest, cfg, verbosity=args.verbosity)
    print(report.text(), end="")
    return 0


def _center_crop(video, height, width):
    H, W = video.shape[2:]
    if H < height or W < width:
        raise ShapeError(
            "\n Clip frames {}x{} are smaller than the network input {}x{} \n".format(
                H, W, height, width
            )
        )
    top, left = (H - height) // 2, (W - width) // 2
    return video[:, :, top : top + height, left : left + width]


def predict_cmd(args):
    cfg = resolve_config(args)
    g = load_network(cfg, args.ckpt)

    video = tensor_read(args.clip)
    if cfg.task == COLOR and video.shape[0] == 3:
        video = to_grayscale(video)
    video = _center_crop(video, *cfg.input_shape[2:])

    tensor_write(predict_video(g, video), args.out)
    print(args.out)
    return 0


def viz_flow(args):
    ppm_write(flow_image(tensor_read(args.flow), args.frame, args.max_flow), args.out)
    print(args.out)
    return 0


def viz_seg(args):
    image = seg_image(tensor_read(args.logits), args.frame, args.class_index)
    ppm_write(image, args.out)
    print(args.out)
    return 0


def viz_filters(args):
    entries = checkpoint_load(args.ckpt)
    name = args.layer + ".w"
    if name not in entries:
        raise V2VError(
            "\n Checkpoint has no weights '{}', layers: {} \n".format(
                name, sorted(k[:-2] for k in entries if k.endswith(".w"))
            )
        )
    ppm_write(filter_grid(entries[name], args.per_row, args.scale), args.out)
    print(args.out)
    return 0


def gradcheck_cmd(args):
    table = run_gradchecks(args.eps, args.samples, args.seed, args.tol)
    print(table.to_string(index=False))
    if not np.all(table["passed"]):
        failed = table.loc[~table["passed"], "op"].tolist()
        raise V2VError(
            "\n Gradient check failed above tolerance {}: {} \n".format(args.tol, failed)
        )
    return 0
