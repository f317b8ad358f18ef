"""Curves in LH^3, their causal character and the built-in example families."""

from dataclasses import dataclass, field

import numpy as np
from scipy.interpolate import PchipInterpolator
from scipy.special import expit

from .errors import ChartBoundaryError, CurveSpecError, InvalidParameterError
from .finite_diff import derivative
from .geodesics import INFINITY, GeodesicCoord, TangentLH, coords_of_ray, metric_array, ray_time
from .lorentz import SIGMA, UnitTangent, cross_array, herm_vector, inner_array
from .tolerances import resolve


@dataclass(frozen=True, eq=False)
class LCurve:
    """A curve ``s -> (mu1(s), mu2(s))`` in the chart U.

    Parameters
    ----------
    mu : callable
        Vectorised ``s -> (mu1, mu2)`` returning complex arrays.
    domain : tuple of float
        Closed parameter interval.
    dmu : callable, optional
        Vectorised analytic derivative; finite differences are used otherwise.
    grid : int
        Default number of samples.
    breakpoints : tuple of float
        Parameters where the curve is glued from pieces.  Finite-difference
        stencils never straddle them.
    base_time : callable, optional
        ``s -> t`` selecting a distinguished curve ``f(s, base_time(s))`` on
        the surface (the generating curve in H^3).  Defaults to ``t = 0``.
    check : bool
        Verify chart validity at the grid points on construction.
    """

    mu: object
    domain: tuple
    dmu: object = None
    grid: int = 512
    name: str = "curve"
    breakpoints: tuple = ()
    base_time: object = None
    params: dict = field(default_factory=dict)
    check: bool = True

    def __post_init__(self):
        lo, hi = self.domain
        if not (np.isfinite(lo) and np.isfinite(hi) and lo < hi):
            raise InvalidParameterError(f"bad domain {self.domain}")
        if self.grid < 2:
            raise InvalidParameterError("grid must have at least 2 samples")
        if not self.check:
            return
        s = self.samples()
        mu1, mu2 = self.mu_array(s)
        margin = np.abs(1 + mu1 * np.conj(mu2))
        bad = ~np.isfinite(margin) | (margin <= resolve(None).chart_eps)
        if np.any(bad):
            raise ChartBoundaryError(f"curve {self.name!r} leaves the chart U at s = {s[bad][0]:.6g}")

    @property
    def analytic(self):
        return self.dmu is not None

    def samples(self, n=None):
        return np.linspace(self.domain[0], self.domain[1], self.grid if n is None else n)

    def mu_array(self, s):
        mu1, mu2 = self.mu(np.asarray(s, dtype=float))
        shape = np.shape(s)
        return np.broadcast_to(np.asarray(mu1, complex), shape), np.broadcast_to(np.asarray(mu2, complex), shape)

    def dmu_array(self, s, h=1e-4):
        s = np.asarray(s, dtype=float)
        if self.dmu is not None:
            d1, d2 = self.dmu(s)
            return np.broadcast_to(np.asarray(d1, complex), s.shape), np.broadcast_to(np.asarray(d2, complex), s.shape)
        out = np.array([self._fd(si, h) for si in s.ravel()]).reshape(s.shape + (2,))
        return out[..., 0], out[..., 1]

    def _fd(self, s, h):
        lo, hi = self.domain
        for b in self.breakpoints:
            if b <= s and b > lo:
                lo = b
            if b > s and b < hi:
                hi = b
        return derivative(lambda x: np.array(self.mu_array(x)), s, h=h, lo=lo, hi=hi)

    def eval(self, s):
        self._check_s(s)
        mu1, mu2 = self.mu_array(float(s))
        return GeodesicCoord(complex(mu1), complex(mu2))

    def base_time_array(self, s):
        if self.base_time is None:
            return np.zeros(np.shape(s))
        return np.asarray(self.base_time(np.asarray(s, dtype=float)), dtype=float)

    def _check_s(self, s):
        lo, hi = self.domain
        if not lo - 1e-12 <= s <= hi + 1e-12:
            raise InvalidParameterError(f"s = {s} outside domain [{lo}, {hi}]")


def curve_derivative(c, s):
    """``alpha'(s)`` as a tangent vector at ``alpha(s)``."""
    at = c.eval(s)
    d1, d2 = c.dmu_array(float(s))
    return TangentLH(at, complex(d1), complex(d2))


# ------------------------------------------------------------ classification


@dataclass
class CausalReport:
    s: np.ndarray
    G: np.ndarray
    null_gi: np.ndarray
    causal_gr: np.ndarray
    regular: np.ndarray
    verdict: str
    vertex: object = None
    scale: float = 1.0
    tol: float = 0.0
    finite_difference: bool = False
    offending_s: list = field(default_factory=list)

    def as_dict(self):
        vertex = None
        if self.vertex is INFINITY:
            vertex = "inf"
        elif self.vertex is not None:
            vertex = [self.vertex.real, self.vertex.imag]
        return {
            "verdict": self.verdict,
            "vertex": vertex,
            "tol": self.tol,
            "scale": self.scale,
            "finite_difference": self.finite_difference,
            "gr": {"min": float(self.G.real.min()), "max": float(self.G.real.max())},
            "gi": {"min": float(self.G.imag.min()), "max": float(self.G.imag.max())},
            "all_null_gi": bool(self.null_gi.all()),
            "all_causal_gr": bool(self.causal_gr.all()),
            "offending_s": [float(x) for x in self.offending_s],
        }


def classify_curve(c, tol=None, reg_tol=1e-10, n=None):
    """Causal character of ``alpha'`` over the sample grid.

    Developable surfaces come from curves that are null for ``G^i`` and
    causal for ``G^r``; ideal cones additionally have one constant endpoint.
    """
    tols = resolve(None)
    if tol is None:
        tol = tols.null_analytic if c.analytic else tols.null_fd
    s = c.samples(n)
    mu1, mu2 = c.mu_array(s)
    d1, d2 = c.dmu_array(s)
    g = metric_array(mu1, mu2, d1, d2)
    scale = max(1.0, float(np.max(np.abs(g))))
    null_gi = np.abs(g.imag) <= tol * scale
    causal_gr = g.real <= tol * scale
    speed = np.abs(d1) + np.abs(d2)
    regular = speed > reg_tol
    report = CausalReport(s, g, null_gi, causal_gr, regular, "non-developable", None, scale, tol, not c.analytic)
    if not regular.all():
        report.verdict = "irregular"
        report.offending_s = list(s[~regular])
        return report
    if not (null_gi.all() and causal_gr.all()):
        report.offending_s = list(s[~(null_gi & causal_gr)])
        return report
    report.verdict = "developable"
    vertex = _constant_endpoint(mu1, mu2, d1, d2, tol)
    if vertex is not None:
        report.verdict = "ideal-cone"
        report.vertex = vertex
    return report


def _constant_endpoint(mu1, mu2, d1, d2, tol):
    dscale = max(1.0, float(np.max(np.abs(d1))), float(np.max(np.abs(d2))))
    if np.all(np.abs(d2) <= tol * dscale):
        m2 = complex(mu2[0])
        return INFINITY if m2 == 0 else 1 / np.conj(m2)
    if np.all(np.abs(d1) <= tol * dscale):
        return complex(-mu1[0])
    return None


# -------------------------------------------------------------- the builtins


@dataclass(frozen=True)
class ExampleParams:
    family: str
    params: dict = field(default_factory=dict)


BUILTIN_DEFAULTS = {
    "nomizu1": {"radius": 1 / 3, "speed": 1.0, "domain": [0.0, 2 * np.pi]},
    "nomizu2": {"shape": "circle", "radius": 0.5, "speed": 1.0, "center": [0.0, 0.0],
                "direction": [1.0, 0.0], "domain": [0.0, 2 * np.pi]},
    "nomizu3": {"kappa": 1.0, "tau": 1.0, "domain": [-2 * np.pi, 2 * np.pi]},
    "nra": {"domain": [-3.0, 3.0]},
}


def builtin_curve(p, grid=512, check=True, **overrides):
    """Build one of the example families.

    ``p`` is an :class:`ExampleParams` or a family name; keyword overrides
    replace default parameters.

    - ``nomizu1``: ``(-zeta, zeta)`` with ``zeta = radius e^{i speed s}``
      (a hyperbolic 2-cylinder).
    - ``nomizu2``: ``(mu, 0)`` with ``mu`` a circle or a line; the locus is an
      ideal cone with vertex at infinity.
    - ``nomizu3``: the rectifying developable of the helix of curvature
      ``kappa`` and torsion ``tau``.
    - ``nra``: a smooth but non-analytic developable asymptotic to both 0 and
      infinity.
    """
    if isinstance(p, str):
        p = ExampleParams(p, {})
    if p.family not in BUILTIN_DEFAULTS:
        raise InvalidParameterError(f"unknown builtin {p.family!r}; known: {sorted(BUILTIN_DEFAULTS)}")
    unknown = set(p.params) | set(overrides)
    unknown -= set(BUILTIN_DEFAULTS[p.family])
    if unknown:
        raise InvalidParameterError(f"unknown parameters for {p.family}: {sorted(unknown)}")
    params = {**BUILTIN_DEFAULTS[p.family], **p.params, **overrides}
    domain = tuple(float(x) for x in params["domain"])
    return _BUILDERS[p.family](params, domain, grid, check)


def _nomizu1(params, domain, grid, check=True):
    r, w = float(params["radius"]), float(params["speed"])
    if not 0 < r < 1:
        raise InvalidParameterError("nomizu1 needs zeta inside the unit disc (0 < radius < 1)")
    if w == 0:
        raise InvalidParameterError("nomizu1 needs a nonzero speed")

    def mu(s):
        z = r * np.exp(1j * w * s)
        return -z, z

    def dmu(s):
        dz = 1j * w * r * np.exp(1j * w * s)
        return -dz, dz

    return LCurve(mu, domain, dmu, grid, "nomizu1", params=params, check=check)


def _nomizu2(params, domain, grid, check=True):
    shape = params["shape"]
    c0 = complex(*params["center"])
    if shape == "circle":
        r, w = float(params["radius"]), float(params["speed"])
        if r <= 0 or w == 0:
            raise InvalidParameterError("nomizu2 circle needs radius > 0 and nonzero speed")

        def mu(s):
            return c0 + r * np.exp(1j * w * s), np.zeros_like(s, dtype=complex)

        def dmu(s):
            return 1j * w * r * np.exp(1j * w * s), np.zeros_like(s, dtype=complex)
    elif shape == "line":
        d = complex(*params["direction"])
        if d == 0:
            raise InvalidParameterError("nomizu2 line needs a nonzero direction")

        def mu(s):
            return c0 + d * s, np.zeros_like(s, dtype=complex)

        def dmu(s):
            return d * np.ones_like(s, dtype=complex), np.zeros_like(s, dtype=complex)
    else:
        raise InvalidParameterError(f"nomizu2 shape must be 'circle' or 'line', got {shape!r}")
    return LCurve(mu, domain, dmu, grid, "nomizu2", params=params, check=check)


def helix_constants(kappa, tau):
    """``(a_plus, a_minus, A_plus, A_minus)`` for the helix of curvature ``kappa`` and torsion ``tau``."""
    ap = np.sqrt((kappa + 1) ** 2 + tau ** 2)
    am = np.sqrt((kappa - 1) ** 2 + tau ** 2)
    q = 1 - kappa ** 2 - tau ** 2
    sp, sm = q + ap * am, -q + ap * am
    if sp < -1e-14 or sm < -1e-14:
        raise InvalidParameterError("helix constants A_plus, A_minus are not real")
    return ap, am, np.sqrt(max(sp, 0.0)), np.sqrt(max(sm, 0.0))


def helix_seed(kappa, tau):
    """Initial data of the rectifying developable of a helix.

    The helix is the orbit of ``c0 = cosh R s0 + sinh R s1`` under the screw
    motion ``diag(e^{l s/2}, e^{-l s/2})`` with ``l = (A_+ + i A_-)/sqrt 2``.
    The ruling at ``s = 0`` is the rectifying direction
    ``(tau e + kappa b)/sqrt(kappa^2 + tau^2)``.

    Returns
    -------
    C1, C2 : complex
        ``alpha(0)``.
    lam : complex
        Screw exponent ``l``; ``alpha(s) = (C1 e^{l s}, C2 e^{-conj(l) s})``.
    t0 : float
        Time at which the ruling through ``alpha(0)`` meets the helix.
    """
    _, _, Ap, Am = helix_constants(kappa, tau)
    lam = (Ap + 1j * Am) / np.sqrt(2)
    T, w = lam.real, lam.imag
    R = np.arcsinh(np.sqrt((1 - T * T) / (T * T + w * w)))
    c = np.cosh(R) * SIGMA[0] + np.sinh(R) * SIGMA[1]
    X = np.diag([lam / 2, -lam / 2])
    Xs = X.conj().T
    d1 = X @ c + c @ Xs
    d2 = X @ X @ c + 2 * X @ c @ Xs + c @ Xs @ Xs
    p, e, acc = herm_vector(c), herm_vector(d1), herm_vector(d2)
    de = acc + inner_array(acc, p) * p
    n = de / np.sqrt(inner_array(de, de))
    b = cross_array(p, e, n)
    u = (tau * e + kappa * b) / np.hypot(kappa, tau)
    pv = UnitTangent.from_vectors(p, u)
    coord = coords_of_ray(pv)
    return coord.mu1, coord.mu2, lam, ray_time(pv, coord)


def _nomizu3(params, domain, grid, check=True):
    kappa, tau = float(params["kappa"]), float(params["tau"])
    if kappa <= 0:
        raise InvalidParameterError("nomizu3 needs kappa > 0")
    C1, C2, lam, t0 = helix_seed(kappa, tau)
    lam2 = -np.conj(lam)

    def mu(s):
        return C1 * np.exp(lam * s), C2 * np.exp(lam2 * s)

    def dmu(s):
        return lam * C1 * np.exp(lam * s), lam2 * C2 * np.exp(lam2 * s)

    def base_time(s):
        return t0 + lam.real * s

    return LCurve(mu, domain, dmu, grid, "nomizu3", base_time=base_time, params=params, check=check)


_K = np.sqrt(2) - 1
_R2 = np.sqrt(2)


def _x1(s):
    s = np.asarray(s, float)
    out = np.where(s >= 0, _K * (s + 1), 0.0)
    m = (s > -1) & (s < 0)
    sm = s[m]
    out[m] = _K * (sm + 1) * expit(-(1 / sm + 1 / (sm + 1)))
    return out


def _dx1(s):
    s = np.asarray(s, float)
    out = np.where(s >= 0, _K, 0.0)
    m = (s > -1) & (s < 0)
    sm = s[m]
    g = 1 / sm + 1 / (sm + 1)
    sig, sig_c = expit(-g), expit(g)
    out[m] = _K * sig + _K * (sm + 1) * sig * sig_c * (1 / sm ** 2 + 1 / (sm + 1) ** 2)
    return out


def _y1(s):
    s = np.asarray(s, float)
    out = np.zeros_like(s)
    m = s > _R2
    out[m] = 2 * np.exp((_R2 + 1) / (_R2 - s[m]))
    return out


def _dy1(s):
    s = np.asarray(s, float)
    out = np.zeros_like(s)
    m = s > _R2
    out[m] = 2 * np.exp((_R2 + 1) / (_R2 - s[m])) * (_R2 + 1) / (_R2 - s[m]) ** 2
    return out


def _nra(params, domain, grid, check=True):
    # the second component mirrors the first: x2(s) = x1(-s), y2(s) = y1(-s)
    def mu(s):
        return _x1(s) + 1j * _y1(s), _x1(-s) + 1j * _y1(-s)

    def dmu(s):
        return _dx1(s) + 1j * _dy1(s), -(_dx1(-s) + 1j * _dy1(-s))

    return LCurve(mu, domain, dmu, grid, "nra", breakpoints=(-_R2, -1.0, 0.0, 1.0, _R2), params=params, check=check)


_BUILDERS = {"nomizu1": _nomizu1, "nomizu2": _nomizu2, "nomizu3": _nomizu3, "nra": _nra}


# ------------------------------------------------------------ sampled curves


def sampled_curve(s, mu1, mu2, grid=512, name="samples", check=True):
    """Monotone-cubic interpolation of sampled ``(mu1, mu2)``."""
    s = np.asarray(s, float)
    mu1, mu2 = np.asarray(mu1, complex), np.asarray(mu2, complex)
    if s.ndim != 1 or s.size < 2 or mu1.shape != s.shape or mu2.shape != s.shape:
        raise CurveSpecError("samples need matching 1-d s, mu1, mu2 with at least 2 entries")
    if np.any(np.diff(s) <= 0):
        raise CurveSpecError("s must be strictly increasing", field="s")
    parts = [PchipInterpolator(s, v) for v in (mu1.real, mu1.imag, mu2.real, mu2.imag)]
    dparts = [q.derivative() for q in parts]

    def mu(x):
        return parts[0](x) + 1j * parts[1](x), parts[2](x) + 1j * parts[3](x)

    def dmu(x):
        return dparts[0](x) + 1j * dparts[1](x), dparts[2](x) + 1j * dparts[3](x)

    params = {"s": s, "mu1": mu1, "mu2": mu2}
    return LCurve(mu, (float(s[0]), float(s[-1])), dmu, grid, name, breakpoints=tuple(s[1:-1]), params=params, check=check)
