"""Ruled surfaces swept by curves in LH^3 and their curvature analysis.

A curve ``alpha(s) = (mu1(s), mu2(s))`` sweeps the surface
``f(s, t) = geodesic_point(alpha(s), t)``; ``t`` is arc length along each
ruling.  The unit normal is ``nu = f_s x f_t / |f_s x f_t|`` and the second
fundamental form is ``h_ij = -<d_i nu, d_j f>``, so the sign of ``H`` follows
this orientation.
"""

from dataclasses import dataclass, field

import numpy as np

from .curves import LCurve, classify_curve
from .errors import InvalidParameterError, SingularityError
from .finite_diff import derivative_uniform, fornberg_weights
from .geodesics import metric_array, moebius_array, moebius_tangent_array
from .lorentz import UnitTangent, act_array, cross_array, inner_array
from .tolerances import resolve


def _herm(a, z, d):
    """Sigma coordinates of ``[[a, z], [conj z, d]]`` with real ``a``, ``d``."""
    return np.stack([(a + d) / 2, z.real, z.imag, (a - d) / 2], axis=-1)


# ------------------------------------------------------------------ kernels


def surface_kernel(mu1, mu2, d1, d2, t):
    """``f``, ``f_s`` and ``f_t`` from the closed form (broadcast over all inputs).

    ``f = (e^t P + e^{-t} Q)/D`` with the null vectors
    ``P = [[1, mu2], [conj mu2, |mu2|^2]]``, ``Q = [[|mu1|^2, -mu1], [-conj mu1, 1]]``
    and ``D = |1 + mu1 conj mu2|``.
    """
    mu1, mu2, d1, d2, t = np.broadcast_arrays(*(np.asarray(x, complex) for x in (mu1, mu2, d1, d2)), np.asarray(t, float))
    ep, em = np.exp(t), np.exp(-t)
    w = 1 + mu1 * np.conj(mu2)
    D = np.abs(w)
    ws = d1 * np.conj(mu2) + mu1 * np.conj(d2)
    Ds = (np.conj(w) * ws).real / D
    P = _herm(np.ones_like(D), mu2, np.abs(mu2) ** 2)
    Q = _herm(np.abs(mu1) ** 2, -mu1, np.ones_like(D))
    Ps = _herm(np.zeros_like(D), d2, 2 * (np.conj(mu2) * d2).real)
    Qs = _herm(2 * (np.conj(mu1) * d1).real, -d1, np.zeros_like(D))
    ep, em, D, Ds = ep[..., None], em[..., None], D[..., None], Ds[..., None]
    f = (ep * P + em * Q) / D
    ft = (ep * P - em * Q) / D
    fs = (ep * Ps + em * Qs) / D - f * Ds / D
    return f, fs, ft


def lambda_kernel(mu1, mu2, d1, d2, t):
    """``Lambda = |f_s x f_t|^2`` in closed form."""
    w = 1 + mu1 * np.conj(mu2)
    g = metric_array(mu1, mu2, d1, d2)
    return (np.exp(2 * t) * np.abs(d2) ** 2 + np.exp(-2 * t) * np.abs(d1) ** 2) / np.abs(w) ** 2 - g.real / 2


def normal_kernel(mu1, mu2, d1, d2, t):
    """Closed-form unit normal ``i/(|w|^3 sqrt Lambda) [[a, z], [-conj z, b]]``."""
    mu1, mu2, d1, d2, t = np.broadcast_arrays(*(np.asarray(x, complex) for x in (mu1, mu2, d1, d2)), np.asarray(t, float))
    c = np.conj
    w = 1 + mu1 * c(mu2)
    wb = c(w)
    ep, em = np.exp(t), np.exp(-t)
    a = 2j * (ep * w * c(mu1) * d2 - em * wb * c(mu1) * d1).imag
    b = -2j * (ep * w * c(mu2) * d2 - em * wb * c(mu2) * d1).imag
    z = -ep * (w * d2 + wb * mu1 * mu2 * c(d2)) + em * (wb * d1 + w * mu1 * mu2 * c(d1))
    lam = lambda_kernel(mu1, mu2, d1, d2, t.real)
    # nodes with Lambda <= 0 give nan; callers mask them
    with np.errstate(invalid="ignore", divide="ignore"):
        k = np.where(lam > 0, 1.0 / (np.abs(w) ** 3 * np.sqrt(np.abs(lam))), np.nan)
    m11 = (1j * a).real * k
    m22 = (1j * b).real * k
    m12 = 1j * z * k
    return _herm(m11, m12, m22), lam


# ---------------------------------------------------------------- the grid


@dataclass
class SurfaceGrid:
    """Sampled surface; arrays are indexed ``[i_s, i_t, ...]`` with sigma coordinates last."""

    curve: LCurve
    s: np.ndarray
    t: np.ndarray
    mu1: np.ndarray
    mu2: np.ndarray
    dmu1: np.ndarray
    dmu2: np.ndarray
    f: np.ndarray
    fs: np.ndarray
    ft: np.ndarray
    nu: np.ndarray
    Lambda: np.ndarray
    singular: np.ndarray
    forced: bool = False
    verdict: str = ""

    @property
    def shape(self):
        return self.f.shape[:2]

    def ruling_ray(self, i, t=0.0, sign=1):
        """Unit tangent of ruling ``i`` at time ``t``, reversed when ``sign < 0``."""
        f, _, ft = surface_kernel(self.mu1[i], self.mu2[i], self.dmu1[i], self.dmu2[i], t)
        return UnitTangent.from_vectors(f, sign * ft)


def generate_surface(c, s_range=None, t_range=(-2.0, 2.0), ns=256, nt=128, force=False, allow_singular=False, tol=None):
    """Sample the ruled surface of ``c`` on an ``ns x nt`` grid.

    Parameters
    ----------
    force : bool
        Build the surface even when ``c`` is not null-causal (a ruled but
        curved surface).
    allow_singular : bool
        Mask nodes with ``Lambda`` below the singular tolerance instead of
        raising :class:`SingularityError`.
    """
    tol = resolve(tol)
    if ns < 8 or nt < 8:
        raise InvalidParameterError("ns and nt must be at least 8")
    report = classify_curve(c)
    if report.verdict == "irregular":
        raise InvalidParameterError(f"curve is irregular at s = {report.offending_s[0]:.6g}")
    if report.verdict == "non-developable" and not force:
        raise InvalidParameterError("curve is not null-causal; pass force=True for a ruled non-developable surface")
    s_range = c.domain if s_range is None else s_range
    s = np.linspace(s_range[0], s_range[1], ns)
    t = np.linspace(t_range[0], t_range[1], nt)
    mu1, mu2 = c.mu_array(s)
    d1, d2 = c.dmu_array(s)
    args = (mu1[:, None], mu2[:, None], d1[:, None], d2[:, None], t[None, :])
    f, fs, ft = surface_kernel(*args)
    nu, lam = normal_kernel(*args)
    singular = ~(lam > tol.singular)
    if singular.any() and not allow_singular:
        i, j = np.argwhere(singular)[0]
        raise SingularityError(f"Lambda = {lam[i, j]:.3g} at (s, t) = ({s[i]:.6g}, {t[j]:.6g})", s[i], t[j])
    nu[singular] = np.nan
    return SurfaceGrid(c, s, t, mu1, mu2, d1, d2, f, fs, ft, nu, lam, singular, force, report.verdict)


def lambda_field(c, s, t):
    """``Lambda(s, t) = |f_s x f_t|^2`` from the closed form."""
    mu1, mu2 = c.mu_array(s)
    d1, d2 = c.dmu_array(s)
    return lambda_kernel(mu1, mu2, d1, d2, np.asarray(t, float))


def lambda_direct(c, s, t):
    """``|f_s x f_t|^2`` from the cross product, for cross-checking."""
    mu1, mu2 = c.mu_array(s)
    d1, d2 = c.dmu_array(s)
    f, fs, ft = surface_kernel(mu1, mu2, d1, d2, t)
    x = cross_array(f, fs, ft)
    return inner_array(x, x)


def unit_normal(c, s, t, tol=None):
    """Closed-form unit normal at ``(s, t)`` as sigma coordinates."""
    mu1, mu2 = c.mu_array(s)
    d1, d2 = c.dmu_array(s)
    nu, lam = normal_kernel(mu1, mu2, d1, d2, t)
    if np.any(~(lam > resolve(tol).singular)):
        raise SingularityError("Lambda vanishes; the normal is undefined", s, t)
    return nu


def cross_normal(c, s, t):
    """``f_s x f_t / |f_s x f_t|``."""
    mu1, mu2 = c.mu_array(s)
    d1, d2 = c.dmu_array(s)
    f, fs, ft = surface_kernel(mu1, mu2, d1, d2, t)
    x = cross_array(f, fs, ft)
    return x / np.sqrt(inner_array(x, x))[..., None]


# ------------------------------------------------------------------- forms


@dataclass
class FundamentalForms:
    g11: np.ndarray
    g12: np.ndarray
    g22: np.ndarray
    h11: np.ndarray
    h12: np.ndarray
    h22: np.ndarray
    h_asymmetry: np.ndarray
    umbilic: np.ndarray
    excluded: np.ndarray

    @property
    def det_g(self):
        return self.g11 * self.g22 - self.g12 ** 2

    @property
    def det_h(self):
        return self.h11 * self.h22 - self.h12 ** 2


def _normal_derivatives(grid, h, accuracy=4):
    """``d nu/ds`` and ``d nu/dt`` by central differences of the closed-form normal."""
    half = accuracy // 2
    offs = tuple(range(-half, half + 1))
    w = fornberg_weights(offs, 1)
    c = grid.curve
    nus = np.zeros_like(grid.nu)
    nut = np.zeros_like(grid.nu)
    t = grid.t[None, :]
    for k, wk in zip(offs, w):
        if wk == 0:
            continue
        sk = grid.s + k * h
        mu1, mu2 = c.mu_array(sk)
        d1, d2 = c.dmu_array(sk)
        nus += wk * normal_kernel(mu1[:, None], mu2[:, None], d1[:, None], d2[:, None], t)[0]
        nut += wk * normal_kernel(grid.mu1[:, None], grid.mu2[:, None], grid.dmu1[:, None], grid.dmu2[:, None], t + k * h)[0]
    return nus / h, nut / h


def fundamental_forms(grid, h=None, tol=None):
    """First form from the analytic partials, second form from differences of the normal.

    The normal is differenced with step ``h`` (default ``tol.fd_step``) in
    both ``s`` and ``t``.
    """
    tol = resolve(tol)
    h = tol.fd_step if h is None else h
    g11 = inner_array(grid.fs, grid.fs)
    g12 = inner_array(grid.fs, grid.ft)
    g22 = inner_array(grid.ft, grid.ft)
    nus, nut = _normal_derivatives(grid, h)
    h11 = -inner_array(nus, grid.fs)
    h12a = -inner_array(nus, grid.ft)
    h21 = -inner_array(nut, grid.fs)
    h22 = -inner_array(nut, grid.ft)
    h12 = (h12a + h21) / 2
    gscale = np.maximum(1.0, np.maximum(np.abs(g11), np.maximum(np.abs(g12), np.abs(g22))))
    umbilic = (np.abs(h11) < tol.umbilic * gscale) & (np.abs(h12) < tol.umbilic * gscale) & (np.abs(h22) < tol.umbilic * gscale)
    detg = g11 * g22 - g12 ** 2
    excluded = grid.singular | ~(detg > tol.singular)
    return FundamentalForms(g11, g12, g22, h11, h12, h22, np.abs(h12a - h21), umbilic, excluded)


@dataclass
class CurvatureField:
    Lambda: np.ndarray
    Kext_closed: np.ndarray
    Kext_numeric: np.ndarray
    H: np.ndarray
    K: np.ndarray
    interior: np.ndarray = field(default=None)
    Kext_ruled: np.ndarray = field(default=None)


def intrinsic_curvature(s, t, g11, g12, g22, accuracy=4):
    """Gaussian curvature of ``E ds^2 + 2F ds dt + G dt^2`` by the Brioschi formula."""
    ds, dt = s[1] - s[0], t[1] - t[0]
    E, F, G = g11, g12, g22

    def d(x, axis, order=1):
        return derivative_uniform(x, ds if axis == 0 else dt, order=order, accuracy=accuracy, axis=axis)

    Es, Et, Fs, Ft, Gs, Gt = d(E, 0), d(E, 1), d(F, 0), d(F, 1), d(G, 0), d(G, 1)
    Ett, Gss, Fst = d(E, 1, 2), d(G, 0, 2), d(d(F, 0), 1)
    m1 = np.stack([
        np.stack([-Ett / 2 + Fst - Gss / 2, Es / 2, Fs - Et / 2], -1),
        np.stack([Ft - Gs / 2, E, F], -1),
        np.stack([Gt / 2, F, G], -1),
    ], -2)
    z = np.zeros_like(E)
    m2 = np.stack([
        np.stack([z, Et / 2, Gs / 2], -1),
        np.stack([Et / 2, E, F], -1),
        np.stack([Gs / 2, F, G], -1),
    ], -2)
    return (np.linalg.det(m1) - np.linalg.det(m2)) / (E * G - F ** 2) ** 2


def curvature_fields(grid, forms, margin=3):
    """Extrinsic, mean and intrinsic curvature at every node.

    ``Kext_closed = -G^i(alpha', alpha') / (2 Lambda^{3/2})`` and
    ``Kext_numeric = det h / det g``; ``K`` is intrinsic.  ``interior``
    marks nodes at least ``margin`` cells from the grid edge.

    Notes
    -----
    ``Kext_closed`` vanishes exactly when ``G^i`` does, but away from null
    curves it is not the extrinsic curvature: it changes under
    reparametrisation of ``s``.  Since rulings are asymptotic
    (``h22 = 0``), ``Kext = -h12^2 / Lambda``, which evaluates to
    ``Kext_ruled = -G^i(alpha', alpha')^2 / (4 Lambda^2)``.  This one matches
    ``Kext_numeric`` and the intrinsic ``K + 1`` on non-developable surfaces.
    """
    gi = metric_array(grid.mu1, grid.mu2, grid.dmu1, grid.dmu2).imag[:, None]
    with np.errstate(invalid="ignore", divide="ignore"):
        kc = -gi / (2 * grid.Lambda ** 1.5)
        kr = -gi ** 2 / (4 * grid.Lambda ** 2)
        detg = forms.det_g
        kn = forms.det_h / detg
        H = (forms.g22 * forms.h11 - 2 * forms.g12 * forms.h12 + forms.g11 * forms.h22) / (2 * detg)
    K = intrinsic_curvature(grid.s, grid.t, forms.g11, forms.g12, forms.g22)
    kr = np.broadcast_to(kr, kn.shape).copy()
    for a in (kc, kr, kn, H, K):
        a[forms.excluded] = np.nan
    interior = np.zeros(grid.shape, bool)
    interior[margin:-margin, margin:-margin] = True
    return CurvatureField(grid.Lambda, kc, kn, H, K, interior & ~forms.excluded, kr)


# ------------------------------------------------------------------ Massey


@dataclass
class RulingFit:
    s: float
    P: float
    Q: float
    residual: float
    exp_residual: float
    ode_residual: float
    type: str
    sign: int = 0

    def as_dict(self):
        return {k: (float(v) if isinstance(v, (float, np.floating)) else v) for k, v in self.__dict__.items()}


@dataclass
class MasseyReport:
    rulings: list
    verdict: str
    fit_tol: float

    def types(self):
        return np.array([r.type for r in self.rulings])

    def as_dict(self):
        return {"verdict": self.verdict, "fit_tol": self.fit_tol, "rulings": [r.as_dict() for r in self.rulings]}


def massey_fit(grid, curvature, forms=None, fit_tol=None, tol=None, min_samples=8, window=3):
    """Fit ``1/H = P cosh t + Q sinh t`` along every ruling.

    A ruling is ``umbilic`` when it has fewer than ``min_samples``
    non-umbilic nodes, ``exp`` when ``||P| - |Q|| / |P| < fit_tol`` and
    ``cosh`` when ``|P| > |Q|`` otherwise.  The overall sign of ``1/H``
    depends on the orientation of the normal and is ignored.  Rulings within ``window`` cells
    of an umbilic ruling are fitted but do not enter the surface verdict.
    """
    tol = resolve(tol)
    fit_tol = tol.massey_fit if fit_tol is None else fit_tol
    H = curvature.H
    if forms is not None:
        node_umb = forms.umbilic | forms.excluded
    else:
        node_umb = ~(np.abs(H) >= tol.umbilic) | np.isnan(H)
    t = grid.t
    dt = t[1] - t[0]
    basis = np.stack([np.cosh(t), np.sinh(t)], axis=1)
    rulings = []
    for i, s in enumerate(grid.s):
        ok = ~node_umb[i]
        if ok.sum() < min_samples:
            rulings.append(RulingFit(float(s), 0.0, 0.0, 0.0, 0.0, 0.0, "umbilic"))
            continue
        u = 1.0 / H[i, ok]
        tt = t[ok]
        (P, Q), *_ = np.linalg.lstsq(basis[ok], u, rcond=None)
        umax = np.max(np.abs(u))
        res = np.max(np.abs(u - basis[ok] @ np.array([P, Q]))) / umax
        exp_res, sign = _exp_fit(tt, u)
        ode = np.nan
        if ok.all():
            upp = derivative_uniform(u, dt, order=2)
            ode = np.max(np.abs(upp - u)) / umax
        ratio = abs(abs(P) - abs(Q)) / abs(P) if P != 0 else np.inf
        if ratio < fit_tol:
            kind = "exp"
        elif abs(P) > abs(Q):
            kind = "cosh"
        else:
            kind = "invalid"
        rulings.append(RulingFit(float(s), float(P), float(Q), float(res), float(exp_res), float(ode), kind, sign))
    types = np.array([r.type for r in rulings])
    umb = types == "umbilic"
    near = np.zeros(len(types), bool)
    for i in np.flatnonzero(umb):
        near[max(0, i - window):i + window + 1] = True
    counted = types[~umb & ~(near & ~umb)]
    if umb.all():
        verdict = "totally-umbilic"
    elif counted.size and np.all(counted == "exp"):
        verdict = "exponential-type"
    elif counted.size and np.all(counted == "cosh"):
        verdict = "cosh-type"
    else:
        verdict = "mixed"
    return MasseyReport(rulings, verdict, fit_tol)


def _exp_fit(t, u):
    """Best single exponential ``A e^{+-t}``: relative residual and the sign of the exponent of ``H``."""
    best = (np.inf, 0)
    for sign in (1, -1):
        e = np.exp(-sign * t)
        a = (e @ u) / (e @ e)
        r = np.max(np.abs(u - a * e)) / np.max(np.abs(u))
        if r < best[0]:
            best = (r, sign)
    return best


# ------------------------------------------------------------- ideal cones


def asymptotic_test(r1, r2):
    """``<p1 + v1, p2 + v2>``; zero exactly when the rays share their forward endpoint."""
    return float(inner_array(r1.p.vector + r1.v.vector, r2.p.vector + r2.v.vector))


def detect_ideal_cone(c, report=None, tol=1e-8):
    """Common endpoint of all rulings, or ``None``.

    The vertex from the classification is cross-checked with
    :func:`asymptotic_test` on the first, middle and last rulings.
    """
    report = classify_curve(c) if report is None else report
    if report.verdict != "ideal-cone":
        return None
    d1, d2 = c.dmu_array(report.s)
    forward = bool(np.all(np.abs(d2) <= np.abs(d1)))
    sign = 1 if forward else -1
    idx = [0, len(report.s) // 2, len(report.s) - 1]
    rays = []
    for i in idx:
        mu1, mu2 = c.mu_array(report.s[i])
        f, _, ft = surface_kernel(mu1, mu2, d1[i], d2[i], 0.0)
        rays.append(UnitTangent.from_vectors(f, sign * ft))
    worst = max(abs(asymptotic_test(a, b)) for a in rays for b in rays)
    if worst > tol:
        return None
    return report.vertex


# ---------------------------------------------------------- Moebius images


def moebius_curve(a, c):
    """Image of ``c`` under the induced action of ``a`` on LH^3."""

    def mu(s):
        m1, m2 = c.mu_array(s)
        return moebius_array(a, m1, m2)

    def dmu(s):
        m1, m2 = c.mu_array(s)
        d1, d2 = c.dmu_array(s)
        return moebius_tangent_array(a, m1, m2, d1, d2)

    return LCurve(mu, c.domain, dmu if c.analytic else None, c.grid, c.name + "*a", c.breakpoints)


def geodesic_time(mu1, mu2, x):
    """Time ``t`` at which the geodesic ``(mu1, mu2)`` passes through ``x``; uses ``<f, Q> = -e^t D/2``."""
    Q = _herm(np.abs(mu1) ** 2, -np.asarray(mu1, complex), np.ones_like(np.abs(mu1)))
    D = np.abs(1 + mu1 * np.conj(mu2))
    return np.log(-2 * inner_array(x, Q) / D)


def equivariance_error(a, c, s_range=None, t_range=(-2.0, 2.0), ns=64, nt=32):
    """Compare ``a . f(s, t)`` with the surface of the image curve.

    The image ruling is parametrised from a shifted origin, so the nodes are
    matched as ``f_a(s, t + phi(s))``.  Returns the max relative deviation
    and ``phi``.
    """
    g = generate_surface(c, s_range, t_range, ns, nt)
    moved = act_array(np.asarray(a.matrix if hasattr(a, "matrix") else a), g.f)
    ca = moebius_curve(a, c)
    m1, m2 = ca.mu_array(g.s)
    d1, d2 = ca.dmu_array(g.s)
    # read the shift where the moved point is nearest the origin, which is best conditioned
    j = np.argmin(moved[..., 0], axis=1)
    rows = np.arange(len(g.s))
    phi = geodesic_time(m1, m2, moved[rows, j]) - g.t[j]
    fa, _, _ = surface_kernel(m1[:, None], m2[:, None], d1[:, None], d2[:, None], g.t[None, :] + phi[:, None])
    err = np.max(np.abs(fa - moved) / np.maximum(1.0, np.abs(moved)))
    return float(err), phi


# ----------------------------------------------------------- structure


def base_curve(grid):
    """Points of the distinguished curve ``f(s, base_time(s))``."""
    bt = grid.curve.base_time_array(grid.s)
    f, _, _ = surface_kernel(grid.mu1, grid.mu2, grid.dmu1, grid.dmu2, bt)
    return f


@dataclass
class StructuralReport:
    applicable: bool
    reason: str = ""
    delta: np.ndarray = None
    delta_t_variation: float = np.nan
    kappa_residual: float = np.nan
    tau_residual: float = np.nan
    direction_residual: float = np.nan
    g12_max: float = np.nan
    asymptotic_within: list = field(default_factory=list)
    asymptotic_between: list = field(default_factory=list)
    kappa: np.ndarray = None
    tau: np.ndarray = None

    def as_dict(self):
        out = {"applicable": self.applicable, "reason": self.reason}
        if not self.applicable:
            return out
        out.update({
            "delta_range": [float(np.nanmin(self.delta)), float(np.nanmax(self.delta))],
            "delta_t_variation": self.delta_t_variation,
            "kappa_residual": self.kappa_residual,
            "tau_residual": self.tau_residual,
            "direction_residual": self.direction_residual,
            "g12_max": self.g12_max,
            "asymptotic_within": self.asymptotic_within,
            "asymptotic_between": self.asymptotic_between,
        })
        return out


def structural_checks(grid, forms, massey, frenet_accuracy=8, margin=8):
    """Identities of exponential-type surfaces along the curve ``c(s) = f(s, 0)``.

    For every exp-type ruling with ``H ~ e^{sigma t}`` this uses the ruling
    direction ``v = sigma f_t``, the normal ``sigma nu`` and

    - ``delta = sigma h11 e^{-sigma t} / g11`` (independent of ``t``),
    - ``v = (n - delta b) / sqrt(1 + delta^2)``,
    - ``kappa = sqrt(1 + delta^2)`` and ``tau = delta' / (1 + delta^2)``,

    and tests that rays ``(c, v)`` in one connected run of such rulings share
    their forward endpoint.
    """
    from .frenet import frenet_apparatus

    if massey.verdict not in ("exponential-type", "totally-umbilic"):
        return StructuralReport(False, f"surface verdict is {massey.verdict}")
    types = massey.types()
    sign = np.array([r.sign for r in massey.rulings])
    ns = len(grid.s)
    j0 = int(np.argmin(np.abs(grid.t)))
    t = grid.t[None, :]
    if massey.verdict == "totally-umbilic":
        delta_nodes = np.zeros(grid.shape)
        sign = np.ones(ns, int)
    else:
        sg = np.where(sign == 0, 1, sign)[:, None]
        delta_nodes = sg * forms.h11 * np.exp(-sg * t) / forms.g11
        delta_nodes[types != "exp"] = 0.0
        sign = np.where(types == "exp", sign, 0)
    delta = delta_nodes[:, j0]
    variation = float(np.nanmax(np.abs(delta_nodes - delta[:, None])))

    # delta is t-independent, but the identities concern the curve at t = 0 exactly
    f0, fs0, ft0 = surface_kernel(grid.mu1, grid.mu2, grid.dmu1, grid.dmu2, 0.0)
    fr = frenet_apparatus(f0, grid.s, accuracy=frenet_accuracy)
    use = np.zeros(ns, bool)
    use[margin:ns - margin] = True
    use &= (sign != 0) | (massey.verdict == "totally-umbilic")
    sgn = np.where(sign == 0, 1, sign)
    v = sgn[:, None] * ft0
    n, b = fr.n, fr.b
    q = np.sqrt(1 + delta ** 2)
    direction = np.abs(v - (n - delta[:, None] * b) / q[:, None])
    kappa_res = np.abs(fr.kappa - q)
    # delta' with respect to arc length of c
    ddelta = derivative_uniform(delta, grid.s[1] - grid.s[0], accuracy=frenet_accuracy) / fr.speed
    tau_res = np.abs(fr.tau - ddelta / (1 + delta ** 2))
    # runs of consecutive exp rulings of one sign share an endpoint
    runs = _runs(sign)
    within, between = [], []
    for lo, hi, sg_ in runs:
        ids = np.arange(lo, hi)
        pv = f0[ids] + sg_ * ft0[ids]
        gram = inner_array(pv[:, None, :], pv[None, :, :])
        within.append({"s": [float(grid.s[lo]), float(grid.s[hi - 1])], "sign": int(sg_),
                       "max_abs": float(np.max(np.abs(gram)))})
    for k in range(len(runs) - 1):
        (a0, a1, sa), (b0, b1, sb) = runs[k], runs[k + 1]
        pa = f0[a0:a1] + sa * ft0[a0:a1]
        pb = f0[b0:b1] + sb * ft0[b0:b1]
        between.append({"runs": [k, k + 1], "min_abs": float(np.min(np.abs(inner_array(pa[:, None], pb[None, :]))))})
    g12_max = float(np.max(np.abs(inner_array(fs0[use], ft0[use])))) if use.any() else 0.0
    return StructuralReport(
        True, "", delta, variation,
        float(np.max(kappa_res[use])) if use.any() else 0.0,
        float(np.nanmax(tau_res[use])) if use.any() else 0.0,
        float(np.max(direction[use])) if use.any() else 0.0,
        g12_max, within, between, fr.kappa, fr.tau,
    )


def _runs(sign):
    out = []
    i, n = 0, len(sign)
    while i < n:
        if sign[i] == 0:
            i += 1
            continue
        j = i
        while j < n and sign[j] == sign[i]:
            j += 1
        out.append((i, j, int(sign[i])))
        i = j
    return out


def analyze_surface(c, s_range=None, t_range=(-2.0, 2.0), ns=256, nt=128, force=False, tol=None):
    """Surface, forms, curvatures, Massey fit and structural checks in one pass."""
    grid = generate_surface(c, s_range, t_range, ns, nt, force=force, tol=tol)
    forms = fundamental_forms(grid, tol=tol)
    curv = curvature_fields(grid, forms)
    massey = massey_fit(grid, curv, forms, tol=tol)
    structural = structural_checks(grid, forms, massey)
    return grid, forms, curv, massey, structural
