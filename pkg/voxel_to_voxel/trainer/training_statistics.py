# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License


class TrainingStatistics:
    def __init__(self):
        super().__init__()

        self.nth_iter = 0

    def init_stats(func):
        def wrapper(self, *args, **kwargs):
            self.n_iter_run = 0
            self.n_epochs_run = 0

            res = func(self, *args, **kwargs)
            return res

        return wrapper
