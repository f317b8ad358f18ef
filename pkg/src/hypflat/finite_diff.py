"""Finite-difference stencils on callables and uniform samples."""

from functools import lru_cache

import numpy as np


@lru_cache(maxsize=None)
def fornberg_weights(offsets, order):
    """Weights of the ``order``-th derivative on the stencil ``offsets`` (unit spacing).

    Fornberg's recursion, evaluated at 0.
    """
    x = np.asarray(offsets, dtype=float)
    n = len(x)
    c = np.zeros((n, order + 1))
    c[0, 0] = 1.0
    c1 = 1.0
    for i in range(1, n):
        c2 = 1.0
        for j in range(i):
            c3 = x[i] - x[j]
            c2 *= c3
            for k in range(min(i, order), -1, -1):
                if j == i - 1:
                    prev = c[i - 1, k - 1] if k > 0 else 0.0
                    c[i, k] = c1 * (k * prev - x[i - 1] * c[i - 1, k]) / c2
            for k in range(min(i, order), -1, -1):
                prev = c[j, k - 1] if k > 0 else 0.0
                c[j, k] = (x[i] * c[j, k] - k * prev) / c3
        c1 = c2
    w = c[:, order].copy()
    w.flags.writeable = False
    return w


def _width(order, accuracy):
    """Odd stencil width giving at least ``accuracy`` for both central and shifted stencils."""
    npts = accuracy + order
    return npts + 1 if npts % 2 == 0 else npts


def derivative(fn, s, h=1e-4, order=1, accuracy=4, lo=-np.inf, hi=np.inf):
    """Derivative of ``fn`` at ``s`` with a stencil kept inside ``[lo, hi]``.

    The stencil is central when it fits and shifts one-sidedly at the ends.
    ``fn`` may return arrays.
    """
    npts = _width(order, accuracy)
    half = npts // 2
    start = -half
    if s - half * h < lo:
        start = int(np.ceil((lo - s) / h - 1e-9))
    elif s + half * h > hi:
        start = int(np.floor((hi - s) / h + 1e-9)) - npts + 1
    offs = tuple(range(start, start + npts))
    w = fornberg_weights(offs, order)
    vals = [np.asarray(fn(s + o * h)) for o in offs]
    return sum(wi * v for wi, v in zip(w, vals)) / h ** order


def derivative_uniform(y, dx, order=1, accuracy=4, axis=0):
    """Derivative of uniformly sampled ``y`` along ``axis``.

    Central stencils in the interior and shifted stencils of the same width
    near the ends.
    """
    y = np.moveaxis(np.asarray(y), axis, 0)
    n = y.shape[0]
    npts = _width(order, accuracy)
    if n < npts:
        raise ValueError(f"need at least {npts} samples, got {n}")
    half = npts // 2
    out = np.empty_like(y, dtype=np.result_type(y, float))
    w = fornberg_weights(tuple(range(-half, half + 1)), order)
    interior = slice(half, n - half)
    acc = np.zeros_like(out[interior])
    for k, wk in zip(range(-half, half + 1), w):
        acc = acc + wk * y[half + k:n - half + k]
    out[interior] = acc
    for i in list(range(half)) + list(range(n - half, n)):
        start = min(max(i - half, 0), n - npts)
        offs = tuple(j - i for j in range(start, start + npts))
        wi = fornberg_weights(offs, order)
        out[i] = np.tensordot(wi, y[start:start + npts], axes=(0, 0))
    return np.moveaxis(out / dx ** order, 0, axis)
