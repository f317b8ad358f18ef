"""The space LH^3 of oriented geodesics in the holomorphic chart U.

An oriented geodesic with ideal endpoints ``gamma_+`` (forward) and
``gamma_-`` (backward) gets coordinates ``mu1 = -gamma_-`` and
``mu2 = 1 / conj(gamma_+)``.  The chart excludes the reflected diagonal
``1 + mu1 conj(mu2) = 0``.

The complex symmetric tensor ``G = 4 dmu1 dmu2bar / (1 + mu1 mu2bar)^2`` is
polarised in the standard way,

    G(x, y) = 2 (dmu1(x) conj(dmu2(y)) + dmu1(y) conj(dmu2(x))) / (1 + mu1 mu2bar)^2,

and its real and imaginary parts are the neutral metrics ``G^r`` and ``G^i``.
"""

from dataclasses import dataclass

import numpy as np

from .errors import ChartBoundaryError, ContractViolation, DegenerateGeodesicError
from .lorentz import HPoint, HTangent, HermMat, MoebiusMap, UnitTangent, herm_matrix
from .tolerances import resolve


class _Infinity:
    """The point at infinity of the Riemann sphere."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    def __str__(self):
        return "inf"

    def __reduce__(self):
        return (_Infinity, ())


INFINITY = _Infinity()


def is_infinity(z):
    return z is INFINITY


def _check_chart(mu1, mu2, tol):
    margin = np.abs(1 + np.asarray(mu1) * np.conj(mu2))
    if np.any(~np.isfinite(margin)) or np.any(margin <= tol.chart_eps):
        raise ChartBoundaryError(
            f"|1 + mu1 conj(mu2)| = {np.min(margin):.3g} is within chart_eps of the reflected diagonal"
        )


@dataclass(frozen=True)
class GeodesicCoord:
    mu1: complex
    mu2: complex

    def __post_init__(self):
        _check_chart(self.mu1, self.mu2, resolve(None))

    @property
    def margin(self):
        return abs(1 + self.mu1 * np.conj(self.mu2))


@dataclass(frozen=True)
class TangentLH:
    at: GeodesicCoord
    dmu1: complex
    dmu2: complex

    def __add__(self, other):
        _same_base(self, other)
        return TangentLH(self.at, self.dmu1 + other.dmu1, self.dmu2 + other.dmu2)

    def __mul__(self, c):
        return TangentLH(self.at, c * self.dmu1, c * self.dmu2)

    __rmul__ = __mul__

    def __neg__(self):
        return TangentLH(self.at, -self.dmu1, -self.dmu2)


@dataclass(frozen=True)
class MetricValue:
    g: complex

    @property
    def gr(self):
        return self.g.real

    @property
    def gi(self):
        return self.g.imag

    def g_theta(self, theta):
        """``Re(exp(-i theta) G)``."""
        return (np.exp(-1j * theta) * self.g).real


@dataclass(frozen=True)
class HomogeneousTangent:
    """Tangent ``h_xi + v_eta`` at the base geodesic through ``(s0, s3)``."""

    xi: complex
    eta: complex

    @property
    def matrix(self):
        return np.array([[0, self.xi - self.eta], [np.conj(self.xi) + np.conj(self.eta), 0]], dtype=complex)


# ------------------------------------------------------------------ kernels


def geodesic_array(mu1, mu2, t):
    """Sigma coordinates of ``gamma(t)`` for the geodesic ``(mu1, mu2)``.

    Broadcasts over ``mu1``, ``mu2`` and ``t``.
    """
    mu1, mu2, t = np.broadcast_arrays(np.asarray(mu1, complex), np.asarray(mu2, complex), np.asarray(t, float))
    d = np.abs(1 + mu1 * np.conj(mu2))
    ep, em = np.exp(t), np.exp(-t)
    m11 = (ep + em * np.abs(mu1) ** 2) / d
    m22 = (ep * np.abs(mu2) ** 2 + em) / d
    m12 = (ep * mu2 - em * mu1) / d
    return np.stack([(m11 + m22) / 2, m12.real, m12.imag, (m11 - m22) / 2], axis=-1)


def velocity_array(mu1, mu2, t):
    """Sigma coordinates of ``gamma'(t)``; the ``e^{-t}`` terms flip sign."""
    mu1, mu2, t = np.broadcast_arrays(np.asarray(mu1, complex), np.asarray(mu2, complex), np.asarray(t, float))
    d = np.abs(1 + mu1 * np.conj(mu2))
    ep, em = np.exp(t), np.exp(-t)
    m11 = (ep - em * np.abs(mu1) ** 2) / d
    m22 = (ep * np.abs(mu2) ** 2 - em) / d
    m12 = (ep * mu2 + em * mu1) / d
    return np.stack([(m11 + m22) / 2, m12.real, m12.imag, (m11 - m22) / 2], axis=-1)


def metric_array(mu1, mu2, d1x, d2x, d1y=None, d2y=None):
    """Complex ``G(x, y)`` on arrays; ``y`` defaults to ``x``."""
    if d1y is None:
        d1y, d2y = d1x, d2x
    w = 1 + np.asarray(mu1) * np.conj(mu2)
    return 2 * (d1x * np.conj(d2y) + d1y * np.conj(d2x)) / w ** 2


# ---------------------------------------------------------------- operations


def geodesic_point(c, t):
    """The point at time ``t`` on the unit-speed geodesic ``c``."""
    _check_chart(c.mu1, c.mu2, resolve(None))
    return HPoint.from_vector(geodesic_array(c.mu1, c.mu2, t))


def geodesic_velocity(c, t):
    """``gamma'(t)`` as a tangent vector at ``gamma(t)``."""
    return HTangent(HPoint.from_vector(geodesic_array(c.mu1, c.mu2, t)),
                    HermMat.from_vector(velocity_array(c.mu1, c.mu2, t)))


def ray_of(c, t=0.0):
    """The unit tangent ``(gamma(t), gamma'(t))`` of the geodesic ``c``."""
    v = geodesic_velocity(c, t)
    return UnitTangent(v.base, v)


def endpoints(c):
    """``(gamma_plus, gamma_minus)`` on the Riemann sphere."""
    gm = -c.mu1
    gp = INFINITY if c.mu2 == 0 else 1 / np.conj(c.mu2)
    return gp, complex(gm)


def coords_from_endpoints(gamma_plus, gamma_minus):
    """Inverse of :func:`endpoints`."""
    if is_infinity(gamma_plus) and is_infinity(gamma_minus):
        raise DegenerateGeodesicError("both endpoints at infinity")
    if not is_infinity(gamma_plus) and not is_infinity(gamma_minus) and gamma_plus == gamma_minus:
        raise DegenerateGeodesicError("gamma_plus == gamma_minus")
    if is_infinity(gamma_minus):
        raise ChartBoundaryError("gamma_- = infinity lies outside the chart U")
    if not is_infinity(gamma_plus) and gamma_plus == 0:
        raise ChartBoundaryError("gamma_+ = 0 lies outside the chart U")
    mu2 = 0j if is_infinity(gamma_plus) else 1 / np.conj(gamma_plus)
    return GeodesicCoord(complex(-gamma_minus), complex(mu2))


def _null_direction(m):
    """``xi`` with ``m = xi xi*`` for a rank-one null Hermitian matrix."""
    if abs(m[0, 0]) >= abs(m[1, 1]):
        return np.array([np.sqrt(m[0, 0].real), m[1, 0] / np.sqrt(m[0, 0].real)])
    return np.array([m[0, 1] / np.sqrt(m[1, 1].real), np.sqrt(m[1, 1].real)])


def coords_of_ray(pv):
    """Coordinates of the oriented geodesic through ``(p, v)``.

    The forward and backward endpoints are read off the null vectors
    ``p + v`` and ``p - v``: a null Hermitian ``xi xi*`` is the ideal point
    ``xi_1 / xi_2``.
    """
    p, v = pv.p.vector, pv.v.vector
    xi = _null_direction(herm_matrix(p + v))
    zeta = _null_direction(herm_matrix(p - v))
    # gamma_+ = xi1/xi2, mu2 = 1/conj(gamma_+) = conj(xi2/xi1)
    if abs(xi[0]) < 1e-300 * max(1.0, abs(xi[1])):
        raise ChartBoundaryError("gamma_+ = 0 lies outside the chart U")
    if abs(zeta[1]) < 1e-300 * max(1.0, abs(zeta[0])):
        raise ChartBoundaryError("gamma_- = infinity lies outside the chart U")
    mu2 = np.conj(xi[1] / xi[0])
    mu1 = -zeta[0] / zeta[1]
    return GeodesicCoord(complex(mu1), complex(mu2))


def ray_time(pv, c=None):
    """Time ``t0`` with ``geodesic_point(coords_of_ray(pv), t0) == p``."""
    c = coords_of_ray(pv) if c is None else c
    m = herm_matrix(pv.p.vector + pv.v.vector)
    return float(np.log(abs(1 + c.mu1 * np.conj(c.mu2)) * m[0, 0].real / 2))


def _same_base(x, y):
    if x.at != y.at:
        raise ContractViolation("tangent vectors at different base points")


def eval_metric(x, y=None):
    """The complex value ``G(x, y)`` (``y`` defaults to ``x``)."""
    y = x if y is None else y
    _same_base(x, y)
    g = metric_array(x.at.mu1, x.at.mu2, x.dmu1, x.dmu2, y.dmu1, y.dmu2)
    return MetricValue(complex(g))


def apply_J(x):
    return TangentLH(x.at, 1j * x.dmu1, 1j * x.dmu2)


def apply_P(x):
    return TangentLH(x.at, -x.dmu1, x.dmu2)


def form_values(x, y):
    """``(omega_J(x, y), omega_P(x, y))`` with ``omega_J = G^i(., J.)`` and ``omega_P = G^r(., P.)``."""
    _same_base(x, y)
    return eval_metric(x, apply_J(y)).gi, eval_metric(x, apply_P(y)).gr


def _mobius_parts(a):
    a = a if isinstance(a, MoebiusMap) else MoebiusMap.from_matrix(a)
    return a.a11, a.a12, a.a21, a.a22


def moebius_array(a, mu1, mu2):
    a11, a12, a21, a22 = _mobius_parts(a)
    den1 = a21 * mu1 - a22
    den2 = np.conj(a12) * mu2 + np.conj(a11)
    return (-a11 * mu1 + a12) / den1, (np.conj(a22) * mu2 + np.conj(a21)) / den2


def moebius_tangent_array(a, mu1, mu2, d1, d2):
    """Pushforward of ``(d1, d2)``; the fractional maps have unit determinant."""
    a11, a12, a21, a22 = _mobius_parts(a)
    return d1 / (a21 * mu1 - a22) ** 2, d2 / (np.conj(a12) * mu2 + np.conj(a11)) ** 2


def moebius_on_LH(a, c):
    """Induced action of ``a`` in SL(2, C) on LH^3 (also on :class:`TangentLH`)."""
    if isinstance(c, TangentLH):
        at = moebius_on_LH(a, c.at)
        d1, d2 = moebius_tangent_array(a, c.at.mu1, c.at.mu2, c.dmu1, c.dmu2)
        return TangentLH(at, complex(d1), complex(d2))
    with np.errstate(divide="ignore", invalid="ignore"):
        m1, m2 = moebius_array(a, c.mu1, c.mu2)
    if not (np.isfinite(m1) and np.isfinite(m2)):
        raise ChartBoundaryError("image geodesic leaves the chart U")
    return GeodesicCoord(complex(m1), complex(m2))


BASE_GEODESIC = GeodesicCoord(0j, 0j)


def homogeneous_to_coords(x):
    """``h_xi + v_eta`` at the base geodesic -> ``(dmu1, dmu2) = (-xi + eta, xi + eta)``."""
    return TangentLH(BASE_GEODESIC, -x.xi + x.eta, x.xi + x.eta)


def killing_form(x, y=None):
    """Half the Killing form of sl(2, C): ``B(X, Y) = 2 tr(XY)``."""
    y = x if y is None else y
    return complex(2 * np.trace(x.matrix @ y.matrix))
