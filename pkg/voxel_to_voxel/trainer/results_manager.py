# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

import pandas as pd

LOSS_COLUMNS = ["iter", "lr", "loss"]


class ResultsManager:
    def __init__(self):
        super().__init__()

        self.results_list = []

    def add(self, nth_iter, lr, loss):
        self.results_list.append({"iter": nth_iter, "lr": lr, "loss": loss})

    @property
    def losses(self):
        return [row["loss"] for row in self.results_list]

    @property
    def loss_curve(self):
        return pd.DataFrame(self.results_list, columns=LOSS_COLUMNS)

    def write_csv(self, path):
        self.loss_curve.to_csv(path, index=False)
        return path


def read_loss_curve(path):
    return pd.read_csv(path)
