"""Frenet apparatus of curves in H^3."""

from dataclasses import dataclass

import numpy as np

from .finite_diff import derivative_uniform
from .lorentz import cross_array, inner_array
from .tolerances import resolve


@dataclass
class FrenetData:
    s: np.ndarray
    speed: np.ndarray
    e: np.ndarray
    n: np.ndarray
    b: np.ndarray
    kappa: np.ndarray
    tau: np.ndarray
    torsion_defined: np.ndarray


def _tangential(x, c):
    # projection onto T_c H^3, using <c, c> = -1
    return x + inner_array(x, c)[..., None] * c


def frenet_apparatus(points, s, accuracy=8, tol=None):
    """Frenet frame, curvature and torsion of a uniformly sampled curve.

    Parameters
    ----------
    points : ndarray, shape (n, 4)
        Sigma coordinates ``c(s_k)`` on the hyperboloid.
    s : ndarray, shape (n,)
        Uniform parameter samples; the curve need not be unit speed.

    Notes
    -----
    With ``V = c'``, ``DV`` the tangential part of ``c''`` and ``N`` the
    part of ``DV`` normal to ``V``,

        kappa = |N| / |V|^2,    tau = <V x DV, (c''')^T> / |V x DV|^2,

    which are the arc-length quantities written for a general parameter.
    ``tau`` is ``nan`` where ``kappa`` is below the Frenet tolerance.
    """
    tol = resolve(tol)
    c = np.asarray(points, float)
    s = np.asarray(s, float)
    ds = s[1] - s[0]
    V = derivative_uniform(c, ds, 1, accuracy)
    A = derivative_uniform(c, ds, 2, accuracy)
    A3 = derivative_uniform(c, ds, 3, accuracy)
    V = _tangential(V, c)
    speed = np.sqrt(inner_array(V, V))
    e = V / speed[:, None]
    DV = _tangential(A, c)
    normal = DV - inner_array(DV, e)[:, None] * e
    nlen = np.sqrt(np.maximum(inner_array(normal, normal), 0.0))
    kappa = nlen / speed ** 2
    defined = kappa > tol.frenet
    with np.errstate(invalid="ignore", divide="ignore"):
        n = normal / nlen[:, None]
        b = cross_array(c, e, n)
        VxA = cross_array(c, V, DV)
        tau = inner_array(VxA, _tangential(A3, c)) / inner_array(VxA, VxA)
    n[~defined] = np.nan
    b[~defined] = np.nan
    tau = np.where(defined, tau, np.nan)
    return FrenetData(s, speed, e, n, b, kappa, tau, defined)
