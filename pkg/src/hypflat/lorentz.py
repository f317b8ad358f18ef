"""Lorentz-Minkowski space L^4 and hyperbolic 3-space in the Hermitian model.

A vector ``x = (x0, x1, x2, x3)`` of L^4 is identified with the Hermitian
matrix ``[[x0 + x3, x1 + i x2], [x1 - i x2, x0 - x3]]``, the form on which
the upper half-space map and the boundary action of SL(2, C) are written.
In this realization ``s2 = [[0, i], [-i, 0]]``, the negative of the Pauli
matrix.  The Lorentz metric is ``<X, Y> = -tr(X cof(Y)) / 2``
so that ``<X, X> = -det X``, and hyperbolic space is the sheet
``{det p = 1, tr p > 0}``.

Two layers live here.  The value types (:class:`HermMat`, :class:`HPoint`,
:class:`HTangent`, :class:`UnitTangent`, :class:`MoebiusMap`) are small
immutable objects that validate their invariants.  The array kernels
(``*_array`` functions) work on ``(..., 4)`` float arrays of sigma
coordinates and are what the surface code uses on whole grids.  The public
operations accept either form.

Orientation note: the cross product follows ``X x Y = (i/2)(X p^-1 Y - Y p^-1 X)``
literally.  At ``p = s0`` the Pauli matrices give ``P1 x P2 = -P3``; in sigma
coordinates, where ``s2 = -P2``, this reads ``s1 x s2 = s3``.
"""

from dataclasses import dataclass

import numpy as np

from .errors import ContractViolation, InvalidMapError, ModelOverflowError
from .tolerances import resolve

SIGMA = np.array(
    [
        [[1, 0], [0, 1]],
        [[0, 1], [1, 0]],
        [[0, 1j], [-1j, 0]],
        [[1, 0], [0, -1]],
    ],
    dtype=complex,
)

_METRIC = np.array([-1.0, 1.0, 1.0, 1.0])


# ---------------------------------------------------------------- kernels


def herm_matrix(x):
    """Sigma coordinates ``(..., 4)`` -> complex matrices ``(..., 2, 2)``."""
    x = np.asarray(x, dtype=float)
    m = np.empty(x.shape[:-1] + (2, 2), dtype=complex)
    m[..., 0, 0] = x[..., 0] + x[..., 3]
    m[..., 0, 1] = x[..., 1] + 1j * x[..., 2]
    m[..., 1, 0] = x[..., 1] - 1j * x[..., 2]
    m[..., 1, 1] = x[..., 0] - x[..., 3]
    return m


def herm_vector(m):
    """Hermitian matrices ``(..., 2, 2)`` -> sigma coordinates ``(..., 4)``.

    Only the Hermitian part of ``m`` is kept.
    """
    m = np.asarray(m)
    a = m[..., 0, 0].real
    d = m[..., 1, 1].real
    b = 0.5 * (m[..., 0, 1] + np.conj(m[..., 1, 0]))
    return np.stack([(a + d) / 2, b.real, b.imag, (a - d) / 2], axis=-1)


def inner_array(x, y):
    return np.sum(_METRIC * np.asarray(x) * np.asarray(y), axis=-1)


def det_array(x):
    return -inner_array(x, x)


def cross_array(p, x, y):
    """Cross product of tangent vectors at ``p`` (all sigma arrays)."""
    pm, xm, ym = herm_matrix(p), herm_matrix(x), herm_matrix(y)
    pinv = _adjugate(pm) / np.linalg.det(pm)[..., None, None]
    z = 0.5j * (xm @ pinv @ ym - ym @ pinv @ xm)
    return herm_vector(z)


def act_array(a, x):
    """``x -> a x a*`` for a 2x2 complex matrix ``a`` (or stack of them)."""
    a = np.asarray(a, dtype=complex)
    return herm_vector(a @ herm_matrix(x) @ np.conj(np.swapaxes(a, -1, -2)))


def _adjugate(m):
    adj = np.empty_like(m)
    adj[..., 0, 0] = m[..., 1, 1]
    adj[..., 0, 1] = -m[..., 0, 1]
    adj[..., 1, 0] = -m[..., 1, 0]
    adj[..., 1, 1] = m[..., 0, 0]
    return adj


# ------------------------------------------------------------ value types


@dataclass(frozen=True)
class HermMat:
    """A vector of L^4 stored by its sigma coordinates."""

    x0: float
    x1: float
    x2: float
    x3: float

    @classmethod
    def from_vector(cls, v):
        v = np.asarray(v, dtype=float)
        return cls(float(v[0]), float(v[1]), float(v[2]), float(v[3]))

    @classmethod
    def from_matrix(cls, m):
        return cls.from_vector(herm_vector(np.asarray(m, dtype=complex)))

    @property
    def vector(self):
        return np.array([self.x0, self.x1, self.x2, self.x3])

    @property
    def matrix(self):
        return herm_matrix(self.vector)

    @property
    def det(self):
        return float(det_array(self.vector))

    @property
    def trace(self):
        return 2.0 * self.x0

    def __add__(self, other):
        return HermMat.from_vector(self.vector + _vec(other))

    def __sub__(self, other):
        return HermMat.from_vector(self.vector - _vec(other))

    def __mul__(self, c):
        return HermMat.from_vector(self.vector * float(c))

    __rmul__ = __mul__

    def __neg__(self):
        return HermMat.from_vector(-self.vector)


def sigma(k):
    """The basis element ``s_k`` as a :class:`HermMat`."""
    v = np.zeros(4)
    v[k] = 1.0
    return HermMat.from_vector(v)


@dataclass(frozen=True)
class HPoint:
    """A point of hyperbolic 3-space (det = 1, trace > 0)."""

    m: HermMat

    def __post_init__(self):
        check_point(self.m.vector)

    @classmethod
    def from_vector(cls, v):
        return cls(HermMat.from_vector(v))

    @property
    def vector(self):
        return self.m.vector

    @property
    def matrix(self):
        return self.m.matrix


@dataclass(frozen=True)
class HTangent:
    """A tangent vector ``m`` at ``base`` (``<base, m> = 0``)."""

    base: HPoint
    m: HermMat

    def __post_init__(self):
        scale = max(1.0, float(np.abs(self.base.vector).max()) * float(np.abs(self.m.vector).max()))
        if abs(inner_array(self.base.vector, self.m.vector)) > 1e-10 * scale:
            raise ContractViolation("tangent vector is not orthogonal to its base point")

    @property
    def vector(self):
        return self.m.vector

    @property
    def matrix(self):
        return self.m.matrix


@dataclass(frozen=True)
class UnitTangent:
    """A point of the unit tangent bundle: ``(p, v)`` with ``<v, v> = 1``."""

    p: HPoint
    v: HTangent

    def __post_init__(self):
        if self.v.base != self.p:
            raise ContractViolation("unit tangent based at a different point")
        n = inner_array(self.v.vector, self.v.vector)
        if abs(n - 1.0) > 1e-10 * max(1.0, float(np.abs(self.v.vector).max()) ** 2):
            raise ContractViolation(f"tangent has squared length {n}, expected 1")

    @classmethod
    def from_vectors(cls, p, v):
        pt = HPoint.from_vector(p)
        return cls(pt, HTangent(pt, HermMat.from_vector(v)))


def check_point(x, tol=None):
    """Raise :class:`ContractViolation` unless ``x`` lies on H^3."""
    tol = resolve(tol)
    x = np.asarray(x, dtype=float)
    d = det_array(x)
    scale = np.maximum(1.0, x[..., 0] ** 2)
    if np.any(np.abs(d - 1.0) > 1e2 * tol.sl2 * scale) or np.any(x[..., 0] <= 0):
        raise ContractViolation("matrix is not a point of H^3 (det != 1 or trace <= 0)")


@dataclass(frozen=True)
class MoebiusMap:
    """An element ``a = [[a11, a12], [a21, a22]]`` of SL(2, C)."""

    a11: complex
    a12: complex
    a21: complex
    a22: complex

    def __post_init__(self):
        d = self.a11 * self.a22 - self.a12 * self.a21
        if abs(d - 1) > resolve(None).sl2 * max(1.0, abs(self.a11 * self.a22), abs(self.a12 * self.a21)):
            raise InvalidMapError(f"det a = {d}, expected 1")

    @classmethod
    def from_matrix(cls, m):
        m = np.asarray(m, dtype=complex)
        return cls(complex(m[0, 0]), complex(m[0, 1]), complex(m[1, 0]), complex(m[1, 1]))

    @classmethod
    def identity(cls):
        return cls(1, 0, 0, 1)

    @property
    def matrix(self):
        return np.array([[self.a11, self.a12], [self.a21, self.a22]], dtype=complex)

    def inverse(self):
        return MoebiusMap(self.a22, -self.a12, -self.a21, self.a11)

    def __matmul__(self, other):
        return MoebiusMap.from_matrix(self.matrix @ other.matrix)

    def on_boundary(self, z):
        """Action on the ideal boundary, with ``None`` standing for infinity."""
        if z is None:
            return None if self.a21 == 0 else self.a11 / self.a21
        den = self.a21 * z + self.a22
        if den == 0:
            return None
        return (self.a11 * z + self.a12) / den


def random_sl2(rng, scale=1.0):
    """A random element of SL(2, C) near the identity (``scale`` sets spread)."""
    while True:
        m = np.eye(2) + scale * (rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))) / 2
        d = np.linalg.det(m)
        if abs(d) > 1e-3:
            return MoebiusMap.from_matrix(m / np.sqrt(d))


@dataclass(frozen=True)
class UpperHalfPoint:
    w: complex
    r: float

    def __post_init__(self):
        if not self.r > 0:
            raise ContractViolation("upper half space requires r > 0")


@dataclass(frozen=True)
class BallPoint:
    x: float
    y: float
    z: float

    def __post_init__(self):
        if not self.x ** 2 + self.y ** 2 + self.z ** 2 < 1:
            raise ContractViolation("ball point must satisfy |x| < 1")


# ------------------------------------------------------------- operations


def _vec(obj):
    if isinstance(obj, (HermMat, HPoint, HTangent)):
        return obj.vector
    return np.asarray(obj, dtype=float)


def minkowski_inner(x, y):
    """``<X, Y> = -tr(X cof(Y)) / 2``; vectorised over sigma arrays."""
    r = inner_array(_vec(x), _vec(y))
    return float(r) if np.ndim(r) == 0 else r


def cross(p, x, y):
    """Cross product ``X x Y`` at ``p``.

    With :class:`HTangent` arguments the base points must coincide with ``p``
    and an :class:`HTangent` is returned; raw arrays give raw arrays.
    """
    if isinstance(x, HTangent) or isinstance(y, HTangent):
        if not (isinstance(x, HTangent) and isinstance(y, HTangent)):
            raise ContractViolation("mixing HTangent and raw vectors")
        if x.base != y.base or (isinstance(p, HPoint) and x.base != p):
            raise ContractViolation("cross product of tangents at different points")
        z = cross_array(x.base.vector, x.vector, y.vector)
        return HTangent(x.base, HermMat.from_vector(z))
    return cross_array(_vec(p), _vec(x), _vec(y))


def act_isometry(a, obj):
    """Apply ``p -> a p a*`` to points, tangents, unit tangents or arrays."""
    if not isinstance(a, MoebiusMap):
        a = MoebiusMap.from_matrix(a)
    m = a.matrix
    if isinstance(obj, HPoint):
        return HPoint.from_vector(act_array(m, obj.vector))
    if isinstance(obj, HTangent):
        base = act_isometry(a, obj.base)
        return HTangent(base, HermMat.from_vector(act_array(m, obj.vector)))
    if isinstance(obj, UnitTangent):
        base = act_isometry(a, obj.p)
        return UnitTangent(base, HTangent(base, HermMat.from_vector(act_array(m, obj.v.vector))))
    if isinstance(obj, HermMat):
        return HermMat.from_vector(act_array(m, obj.vector))
    return act_array(m, obj)


def upper_array(x, tol=None):
    """Sigma arrays on H^3 -> ``(w, r)`` arrays in the upper half space."""
    x = np.asarray(x, dtype=float)
    den = x[..., 0] - x[..., 3]
    if np.any(np.abs(den) < 1e-300):
        raise ModelOverflowError("point too close to the ideal point at infinity")
    w = (x[..., 1] + 1j * x[..., 2]) / den
    return w, 1.0 / den


def from_upper_array(w, r):
    w = np.asarray(w, dtype=complex)
    r = np.asarray(r, dtype=float)
    x0m3 = 1.0 / r
    x1 = w.real * x0m3
    x2 = w.imag * x0m3
    # det = x0^2 - x3^2 - x1^2 - x2^2 = 1 and x0 - x3 = 1/r
    x0p3 = (1.0 + x1 ** 2 + x2 ** 2) / x0m3
    return np.stack([(x0p3 + x0m3) / 2, x1, x2, (x0p3 - x0m3) / 2], axis=-1)


def ball_array(x):
    x = np.asarray(x, dtype=float)
    return x[..., 1:] / (1.0 + x[..., :1])


def from_ball_array(b):
    b = np.asarray(b, dtype=float)
    n2 = np.sum(b * b, axis=-1, keepdims=True)
    return np.concatenate([(1 + n2) / (1 - n2), 2 * b / (1 - n2)], axis=-1)


def to_upper(p):
    w, r = upper_array(_vec(p))
    return UpperHalfPoint(complex(w), float(r))


def from_upper(q):
    return HPoint.from_vector(from_upper_array(q.w, q.r))


def to_ball(p):
    b = ball_array(_vec(p))
    return BallPoint(*map(float, b))


def from_ball(b):
    return HPoint.from_vector(from_ball_array([b.x, b.y, b.z]))


def hyperbolic_distance(p, q, tol=None):
    """``arccosh(-<p, q>)``, clamping roundoff just below 1.

    Evaluated as ``2 asinh(|p - q| / 2)``, which equals the arccosh form but
    keeps full accuracy for nearby points.
    """
    tol = resolve(tol)
    p, q = _vec(p), _vec(q)
    c = -inner_array(p, q)
    if np.any(c < 1.0 - tol.arccosh_clamp):
        raise ContractViolation(f"-<p, q> = {np.min(c)} < 1; arguments are not points of H^3")
    chord2 = np.maximum(inner_array(p - q, p - q), 0.0)
    d = 2 * np.arcsinh(np.sqrt(chord2) / 2)
    return float(d) if np.ndim(d) == 0 else d


def geodesic_ray(pv, t):
    """The point ``p cosh t + v sinh t`` of the unit-speed geodesic."""
    x = np.cosh(t) * pv.p.vector + np.sinh(t) * pv.v.vector
    return HPoint.from_vector(x)


def geodesic_flow(pv, t):
    """Transport ``(p, v)`` to ``(gamma(t), gamma'(t))``."""
    p, v = pv.p.vector, pv.v.vector
    return UnitTangent.from_vectors(np.cosh(t) * p + np.sinh(t) * v, np.sinh(t) * p + np.cosh(t) * v)


def random_unit_tangent(rng):
    """A random unit tangent, built as ``(a a*, a s3 a*)`` for random ``a``."""
    a = random_sl2(rng, scale=1.0).matrix
    return UnitTangent.from_vectors(act_array(a, [1, 0, 0, 0]), act_array(a, [0, 0, 0, 1]))
