# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

import numpy as np
from tqdm import tqdm


class ProgressBarBase:
    def __init__(self, n_iter, desc):
        self.loss_best = np.inf
        self._best_since_iter = 0

    @property
    def best_since_iter(self):
        return self._best_since_iter

    def _new2best(self, loss_new, nth_iter):
        if loss_new < self.loss_best:
            self.loss_best = loss_new
            self._best_since_iter = nth_iter


class ProgressBarLVL0(ProgressBarBase):
    def update(self, loss_new, lr, nth_iter):
        self._new2best(loss_new, nth_iter)

    def close(self):
        pass


class ProgressBarLVL1(ProgressBarBase):
    def __init__(self, n_iter, desc):
        super().__init__(n_iter, desc)
        self._tqdm = tqdm(total=n_iter, desc=desc, leave=False)

    def update(self, loss_new, lr, nth_iter):
        self._new2best(loss_new, nth_iter)

        self._tqdm.set_postfix(
            loss="{:.5g}".format(loss_new),
            best_loss="{:.5g}".format(self.loss_best),
            lr="{:.1e}".format(lr),
        )
        self._tqdm.update(1)

    def close(self):
        self._tqdm.close()
        del self._tqdm


def progress_bar(verbosity, n_iter, desc):
    if "progress_bar" in verbosity:
        return ProgressBarLVL1(n_iter, desc)
    return ProgressBarLVL0(n_iter, desc)
