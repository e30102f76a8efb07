# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

import os
import time
import numpy as np

from dataclasses import dataclass

import pandas as pd

from .optimizer import lr_at, sgd_step
from .video_data import VideoDataset
from .times_tracker import TimesTracker
from .training_statistics import TrainingStatistics
from .results_manager import ResultsManager
from .progress_bar import progress_bar
from .print_info import print_info
from .stop_run import StopRun
from ..networks import (
    build_network,
    init_params,
    forward,
    backward,
    bind_checkpoint,
    graph_checkpoint,
)
from ..tensor_core import checkpoint_save, checkpoint_load, is_finite
from ..errors import ConfigError, V2VError

FINAL_CHECKPOINT = "final.ckpt"
LOSS_LOG = "loss.csv"


def network_from_config(cfg):
    return build_network(cfg.architecture, cfg.head, cfg.input_shape, cfg.width_mult)


@dataclass
class TrainResult:
    checkpoint: str
    loss_log: str
    loss_curve: pd.DataFrame
    graph: object
    bind_report: object = None

    @property
    def final_loss(self):
        return float(self.loss_curve["loss"].iloc[-1])


class Trainer(TimesTracker, TrainingStatistics):
    """
    Single-clip minibatch SGD over the clips of a manifest, in a seeded
    order that is reshuffled every epoch.
    """

    def __init__(self, cfg, verbosity=["progress_bar", "print_results", "print_times"]):
        super().__init__()

        self.cfg = cfg.check_task()
        self.verbosity = [] if verbosity is False else verbosity
        self.head = cfg.head
        self.results_mang = ResultsManager()

        self.graph = network_from_config(cfg)
        init_params(self.graph, cfg.seed, cfg.init_scheme)
        self.bind_report = None
        if cfg.init_checkpoint:
            self.bind_report = bind_checkpoint(
                self.graph, checkpoint_load(cfg.init_checkpoint)
            )

        self.velocity = {}
        self.rng = np.random.default_rng((cfg.seed, 1))

    @TimesTracker.forward_time
    def _forward(self, x, target):
        prediction, cache = forward(self.graph, x)
        loss, dprediction = self.head.loss(prediction, self.head.to_target(target))
        return loss, dprediction, cache

    @TimesTracker.backward_time
    def _backward(self, cache, dprediction):
        return backward(self.graph, cache, dprediction)

    @TimesTracker.iter_time
    def _iteration(self, x, target):
        lr = lr_at(self.cfg, self.nth_iter)

        loss, dprediction, cache = self._forward(x, target)
        if not is_finite(loss):
            raise V2VError(
                "\n Training loss became {} at iteration {} \n".format(loss, self.nth_iter)
            )
        grads = self._backward(cache, dprediction)
        sgd_step(
            self.graph.params,
            grads,
            lr,
            self.cfg.momentum,
            self.velocity,
            weight_decay=self.cfg.weight_decay,
            grad_clip=self.cfg.grad_clip,
        )

        self.results_mang.add(self.nth_iter, lr, loss)
        self.p_bar.update(loss, lr, self.nth_iter)
        self.stop.update(self.p_bar.loss_best, self.results_mang.losses)

        self.n_iter_run += 1

    def _clip_order(self, windows):
        while True:
            self.n_epochs_run += 1
            for i in self.rng.permutation(len(windows)):
                yield windows[i]

    def _save(self, name):
        path = os.path.join(self.cfg.out_dir, name)
        checkpoint_save(graph_checkpoint(self.graph), path)
        return path

    @TrainingStatistics.init_stats
    def init_run(self, manifest):
        self.data = VideoDataset(
            manifest, self.head, self.cfg.input_shape, self.cfg.train_crop
        )
        self.windows = self.data.windows(self.cfg.clip_stride_train)
        os.makedirs(self.cfg.out_dir, exist_ok=True)

        self.stop = StopRun(
            time.time(),
            self.cfg.max_time,
            self.cfg.target_loss,
            self.cfg.n_iter_no_change,
        )
        self.p_bar = progress_bar(
            self.verbosity, self.cfg.max_iters, "train {}".format(self.cfg.task)
        )

    def finish_run(self):
        checkpoint = self._save(FINAL_CHECKPOINT)
        losses = self.results_mang.losses

        print_info(
            self.verbosity,
            "{} / {}".format(self.cfg.task, self.cfg.architecture),
            losses[-1],
            self.p_bar.loss_best,
            self.p_bar.best_since_iter,
            self.forward_times,
            self.backward_times,
            self.iter_times,
            self.n_iter_run,
            self.n_epochs_run,
            self.cfg.seed,
        )
        return TrainResult(
            checkpoint=checkpoint,
            loss_log=self.loss_log,
            loss_curve=self.results_mang.loss_curve,
            graph=self.graph,
            bind_report=self.bind_report,
        )

    def train(self, manifest=None):
        manifest = manifest or self.cfg.manifest
        if manifest is None:
            raise ConfigError("\n No manifest given for training \n")
        self.init_run(manifest)

        try:
            self._run_iterations()
        finally:
            self.p_bar.close()
            self.loss_log = self.results_mang.write_csv(
                os.path.join(self.cfg.out_dir, LOSS_LOG)
            )

        return self.finish_run()

    def _run_iterations(self):
        clips = self._clip_order(self.windows)
        every = self.cfg.checkpoint_every
        for nth_iter in range(self.cfg.max_iters):
            self.nth_iter = nth_iter
            x, target = self.data.clip(next(clips), self.rng)
            self._iteration(x, target)

            if every and (nth_iter + 1) % every == 0 and nth_iter + 1 < self.cfg.max_iters:
                self._save("iter_{:07d}.ckpt".format(nth_iter + 1))
            if self.stop.check():
                break


def train(cfg, manifest=None, verbosity=["progress_bar", "print_results", "print_times"]):
    return Trainer(cfg, verbosity).train(manifest)
