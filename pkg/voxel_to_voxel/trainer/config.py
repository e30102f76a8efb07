# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

from typing import Literal, Optional, Tuple

from pydantic import BaseModel, Field, ValidationError

from ..networks import TaskHead
from ..errors import ConfigError


PRESETS = {
    # fine-tuned from an encoder checkpoint
    "seg": dict(base_lr=1e-4, decay_every=30_000, max_iters=100_000),
    # trained from scratch on teacher labels
    "flow": dict(base_lr=1e-8, decay_every=200_000, max_iters=800_000),
    "color": dict(
        base_lr=1e-8,
        decay_every=200_000,
        max_iters=600_000,
        input_shape=(1, 16, 112, 112),
    ),
}

TUPLE_KEYS = ("input_shape",)
NONE_VALUES = ("", "none", "None", "null")


class TrainConfig(BaseModel):
    task: Literal["seg", "flow", "color"] = "seg"
    n_classes: int = Field(8, ge=1)
    alpha: float = Field(15.0, gt=0)
    huber_smooth: bool = False
    architecture: Literal[
        "v2v", "conv3b_up", "conv4b_up", "conv5b_up", "v2v_2d"
    ] = "v2v"

    base_lr: float = Field(1e-4, gt=0)
    decay_every: int = Field(30_000, gt=0)
    decay_factor: float = Field(10.0, gt=0)
    max_iters: int = Field(100_000, gt=0)
    momentum: float = Field(0.9, ge=0)
    weight_decay: float = Field(0.0, ge=0)
    grad_clip: Optional[float] = Field(None, gt=0)
    seed: int = Field(0, ge=0)

    init_checkpoint: Optional[str] = None
    init_scheme: Literal["he", "he+trilinear-deconv"] = "he"

    clip_stride_train: int = Field(1, ge=1)
    clip_stride_eval: int = Field(16, ge=1)
    width_mult: float = Field(1.0, gt=0)
    input_shape: Tuple[int, int, int, int] = (3, 16, 112, 112)
    train_crop: Literal["center", "random"] = "center"

    checkpoint_every: int = Field(0, ge=0)
    out_dir: str = "runs"
    manifest: Optional[str] = None

    max_time: Optional[float] = Field(None, gt=0)
    target_loss: Optional[float] = None
    n_iter_no_change: Optional[int] = Field(None, ge=1)

    class Config:
        extra = "forbid"

    @property
    def head(self):
        return TaskHead(
            self.task,
            n_classes=self.n_classes,
            alpha=self.alpha,
            huber_smooth=self.huber_smooth,
        )

    @property
    def clip_len(self):
        return self.input_shape[1]

    def values(self):
        return {name: getattr(self, name) for name in fields_of(TrainConfig)}

    def updated(self, **overrides):
        """New config with the non-None overrides applied and validated."""
        values = self.values()
        values.update({k: v for k, v in overrides.items() if v is not None})
        return make_config(values)

    def check_task(self):
        if self.input_shape[0] != self.head.in_channels:
            raise ConfigError(
                "\n Task '{}' reads {} input channel(s), input_shape {} has {} \n".format(
                    self.task, self.head.in_channels, self.input_shape, self.input_shape[0]
                )
            )
        return self

    @classmethod
    def preset(cls, task, **overrides):
        if task not in PRESETS:
            raise ConfigError(
                "\n No preset for task '{}', expected one of {} \n".format(
                    task, list(PRESETS)
                )
            )
        values = dict(PRESETS[task], task=task)
        values.update(overrides)
        return make_config(values)


def fields_of(model):
    # pydantic 2 renamed __fields__ to model_fields
    return list(getattr(model, "model_fields", None) or model.__fields__)


def make_config(values):
    try:
        return TrainConfig(**values)
    except ValidationError as err:
        raise ConfigError("\n Invalid training config:\n{} \n".format(err)) from err


def _convert(key, value):
    if value in NONE_VALUES:
        return None
    if key in TUPLE_KEYS:
        return tuple(part.strip() for part in value.split(","))
    return value


def parse_config_text(text, source="<config>"):
    """`key = value` lines, `#` starts a comment, blank lines are skipped."""
    values = {}
    for n_line, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(
                "\n {} line {}: expected 'key = value', got '{}' \n".format(
                    source, n_line, line
                )
            )
        key, value = (part.strip() for part in line.split("=", 1))
        if not key:
            raise ConfigError("\n {} line {}: empty key \n".format(source, n_line))
        if key in values:
            raise ConfigError(
                "\n {} line {}: key '{}' given twice \n".format(source, n_line, key)
            )
        values[key] = _convert(key, value)
    return values


def load_config(path, **overrides):
    with open(path, "r", encoding="utf-8") as f:
        values = parse_config_text(f.read(), source=path)
    values.update({k: v for k, v in overrides.items() if v is not None})
    return make_config(values)
