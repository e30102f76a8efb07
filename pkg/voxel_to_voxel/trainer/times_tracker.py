# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

import time


def _timed(attribute):
    def decorator(func):
        def wrapper(self, *args, **kwargs):
            t = time.time()
            res = func(self, *args, **kwargs)
            getattr(self, attribute).append(time.time() - t)
            return res

        return wrapper

    return decorator


class TimesTracker:
    def __init__(self):
        super().__init__()

        self.forward_times = []
        self.backward_times = []
        self.iter_times = []

    forward_time = _timed("forward_times")
    backward_time = _timed("backward_times")
    iter_time = _timed("iter_times")
