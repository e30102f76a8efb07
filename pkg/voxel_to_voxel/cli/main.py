# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

import sys
import logging
import argparse

from . import commands
from .checks import DEFAULT_TOLERANCE
from ..errors import V2VError, ConfigError

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DATA = 3
EXIT_IO = 4

VERBOSITY = ["progress_bar", "print_results", "print_times"]


def _add_config_flags(parser):
    parser.add_argument("--config", default=None, help="'key = value' config file")
    for key in commands.CONFIG_KEYS:
        flag = "--" + key.replace("_", "-")
        parser.add_argument(flag, dest=key, default=None, help="overrides '{}'".format(key))
    parser.add_argument("--init", dest="init_checkpoint", default=None)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="v2v", description="Voxel-to-voxel video prediction"
    )
    parser.add_argument(
        "--quiet", action="store_true", help="no progress bars or summaries"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("make-data", help="render a synthetic dataset")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--height", type=int, default=64)
    p.add_argument("--width", type=int, default=64)
    p.add_argument("--frames", type=int, default=16)
    p.add_argument("--classes", type=int, default=8)
    p.add_argument("--objects", type=int, default=2)
    p.add_argument("--max-speed", type=int, default=2)
    p.add_argument("--noise", type=float, default=0.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=commands.make_data)

    p = sub.add_parser("teacher-flow", help="label clips with Horn-Schunck flow")
    p.add_argument("--manifest", required=True)
    p.add_argument("--smoothness", type=float, default=1.0)
    p.add_argument("--iters", type=int, default=100)
    p.add_argument("--levels", type=int, default=1)
    p.add_argument("--out", required=True)
    p.set_defaults(func=commands.teacher_flow)

    p = sub.add_parser("train", help="train a network")
    _add_config_flags(p)
    p.set_defaults(func=commands.train_cmd)

    p = sub.add_parser("eval", help="score a checkpoint on a manifest")
    _add_config_flags(p)
    p.add_argument("--ckpt", required=True)
    p.set_defaults(func=commands.eval_cmd)

    p = sub.add_parser("predict", help="predict a whole clip file")
    _add_config_flags(p)
    p.add_argument("--ckpt", required=True)
    p.add_argument("--clip", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=commands.predict_cmd)

    p = sub.add_parser("viz-flow", help="color-wheel image of one flow frame")
    p.add_argument("--flow", required=True)
    p.add_argument("--frame", type=int, default=0)
    p.add_argument("--max-flow", type=float, default=None)
    p.add_argument("--out", required=True)
    p.set_defaults(func=commands.viz_flow)

    p = sub.add_parser("viz-seg", help="class map or heat map of one frame")
    p.add_argument("--logits", required=True)
    p.add_argument("--frame", type=int, default=0)
    p.add_argument("--class", dest="class_index", type=int, default=None)
    p.add_argument("--out", required=True)
    p.set_defaults(func=commands.viz_seg)

    p = sub.add_parser("viz-filters", help="tile the filters of a conv layer")
    p.add_argument("--ckpt", required=True)
    p.add_argument("--layer", default="conv1a")
    p.add_argument("--per-row", type=int, default=8)
    p.add_argument("--scale", type=int, default=10)
    p.add_argument("--out", required=True)
    p.set_defaults(func=commands.viz_filters)

    p = sub.add_parser("gradcheck", help="finite-difference check of every op")
    p.add_argument("--eps", type=float, default=1e-3)
    p.add_argument("--samples", type=int, default=64)
    p.add_argument("--tol", type=float, default=DEFAULT_TOLERANCE)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=commands.gradcheck_cmd)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_OK

    args.verbosity = [] if args.quiet else VERBOSITY
    try:
        return args.func(args)
    except ConfigError as err:
        logging.error("%s", err)
        return EXIT_USAGE
    except V2VError as err:
        logging.error("%s", err)
        return EXIT_DATA
    except OSError as err:
        logging.error("%s", err)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
