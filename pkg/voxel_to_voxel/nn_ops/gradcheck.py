# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

import numpy as np


def gradcheck(layer, x, eps=1e-3, n_samples=None, random_state=0, atol=1e-6):
    """
    Compares the analytic gradient of a layer against central differences.

    `layer(x)` must return `(y, vjp)` where `vjp(dy)` is the gradient of
    sum(y * dy) w.r.t. x. The scalar loss is a random projection of y.
    The check runs on a float64 replica of x; closures over float32 weights
    are promoted by numpy. Returns the worst relative error over the checked
    coordinates (all of them, or `n_samples` randomly chosen ones).
    """
    rng = np.random.default_rng(random_state)
    x = np.array(x, dtype=np.float64)

    y, vjp = layer(x)
    projection = rng.standard_normal(np.shape(y))
    analytic = np.asarray(vjp(projection), dtype=np.float64)

    def loss(x_):
        y_, _ = layer(x_)
        return float(np.sum(np.asarray(y_, dtype=np.float64) * projection))

    if n_samples is None or n_samples >= x.size:
        coords = np.arange(x.size)
    else:
        coords = rng.choice(x.size, size=n_samples, replace=False)

    max_error = 0.0
    for flat in coords:
        x_plus = x.copy()
        x_plus.flat[flat] += eps
        x_minus = x.copy()
        x_minus.flat[flat] -= eps

        numeric = (loss(x_plus) - loss(x_minus)) / (2 * eps)
        exact = analytic.flat[flat]

        error = abs(numeric - exact) / (max(abs(numeric), abs(exact)) + atol)
        max_error = max(max_error, error)

    return max_error
