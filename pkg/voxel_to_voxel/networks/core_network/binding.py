# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

import logging
import numpy as np

from dataclasses import dataclass, field
from typing import List

from ...errors import ShapeError


@dataclass
class BindReport:
    loaded: List[str] = field(default_factory=list)
    not_loaded: List[str] = field(default_factory=list)
    unexpected: List[str] = field(default_factory=list)


def graph_checkpoint(g):
    return {name: g.params[name] for name in sorted(g.params)}


def bind_checkpoint(g, entries):
    """
    Copies every checkpoint entry whose name matches a graph parameter.
    Parameters without an entry keep their initialization, entries without
    a parameter are reported. A matching name with other dims is an error.
    """
    report = BindReport()
    for name in sorted(entries):
        if name not in g.params:
            report.unexpected.append(name)
            continue
        value = np.asarray(entries[name], dtype=np.float32)
        if value.shape != g.params[name].shape:
            raise ShapeError(
                "\n Shape mismatch on assign '{}': checkpoint {} vs graph {} \n".format(
                    name, value.shape, g.params[name].shape
                )
            )
        g.params[name] = value.copy()
        report.loaded.append(name)

    report.not_loaded = sorted(set(g.params) - set(report.loaded))

    for name in report.not_loaded:
        logging.warning("Parameter '%s' initialized, not loaded", name)
    for name in report.unexpected:
        logging.warning("Checkpoint entry '%s' unexpected, ignored", name)

    return report
