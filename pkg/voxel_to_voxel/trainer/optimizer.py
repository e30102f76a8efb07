# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

import numpy as np

from decimal import Decimal


def lr_at(cfg, nth_iter):
    """
    Step decay: base_lr divided by decay_factor every decay_every iterations.
    Evaluated in decimal, so 1e-8 after three decays is exactly 1e-11.
    """
    n_decays = nth_iter // cfg.decay_every
    lr = Decimal(repr(cfg.base_lr)) / Decimal(repr(cfg.decay_factor)) ** n_decays
    return float(lr)


def clip_gradients(grads, max_norm):
    norm = np.sqrt(sum(float(np.sum(np.square(g))) for g in grads.values()))
    if norm <= max_norm:
        return grads
    scale = max_norm / norm
    return {name: g * scale for name, g in grads.items()}


def sgd_step(
    params, grads, lr, momentum, velocity, weight_decay=0.0, grad_clip=None
):
    """
    In-place momentum SGD over a dict of parameter tensors:
    v <- momentum * v - lr * g, p <- p + v.
    """
    if grad_clip is not None:
        grads = clip_gradients(grads, grad_clip)

    for name, param in params.items():
        grad = grads[name]
        if weight_decay:
            grad = grad + weight_decay * param

        v = velocity.get(name)
        if v is None:
            v = np.zeros_like(param)
        v = (momentum * v - lr * grad).astype(param.dtype, copy=False)

        velocity[name] = v
        params[name] = param + v
