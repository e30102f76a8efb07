# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License


import logging
import time
import numpy as np


def time_exceeded(start_time, max_time):
    run_time = time.time() - start_time
    return max_time and run_time > max_time


def loss_reached(loss_best, target_loss):
    return target_loss is not None and loss_best <= target_loss


def no_change(loss_list, n_iter_no_change):
    if len(loss_list) <= n_iter_no_change:
        return False

    # iterations since the lowest loss so far
    best_index = int(np.argmin(loss_list))
    return len(loss_list) - 1 - best_index >= n_iter_no_change


class StopRun:
    def __init__(self, start_time, max_time, target_loss, n_iter_no_change):
        self.start_time = start_time
        self.max_time = max_time
        self.target_loss = target_loss
        self.n_iter_no_change = n_iter_no_change

        self.loss_best = np.inf
        self.loss_list = []
        self.reason = None

    def update(self, loss_best, loss_list):
        self.loss_best = loss_best
        self.loss_list = loss_list

    def check(self):
        if self.max_time and time_exceeded(self.start_time, self.max_time):
            self.reason = "max_time {} sec exceeded".format(self.max_time)
        elif loss_reached(self.loss_best, self.target_loss):
            self.reason = "target loss {} reached".format(self.target_loss)
        elif self.n_iter_no_change and no_change(
            self.loss_list, self.n_iter_no_change
        ):
            self.reason = "no new best loss for {} iterations".format(
                self.n_iter_no_change
            )
        else:
            return False

        logging.info("Stopping training early: %s", self.reason)
        return True
