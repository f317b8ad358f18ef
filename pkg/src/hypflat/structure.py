"""Numerical verification of the invariant structures on LH^3.

Each check returns a :class:`VerificationReport`; none of them raise on a
numerical failure.
"""

from dataclasses import asdict, dataclass, field

import numpy as np

from .geodesics import (
    HomogeneousTangent,
    TangentLH,
    GeodesicCoord,
    coords_of_ray,
    eval_metric,
    form_values,
    homogeneous_to_coords,
    killing_form,
    moebius_on_LH,
)
from .errors import ChartBoundaryError
from .lorentz import SIGMA, UnitTangent, herm_vector, inner_array, random_sl2


@dataclass
class Check:
    max_deviation: float
    threshold: float

    @property
    def passed(self):
        return bool(np.isfinite(self.max_deviation) and self.max_deviation < self.threshold)


@dataclass
class VerificationReport:
    """Named collection of ``(max_deviation, threshold)`` checks."""

    name: str
    checks: dict
    samples: int
    details: dict = field(default_factory=dict)

    @property
    def passed(self):
        return all(c.passed for c in self.checks.values())

    @property
    def max_deviation(self):
        return max(c.max_deviation for c in self.checks.values())

    def as_dict(self):
        d = asdict(self)
        for k, c in self.checks.items():
            d["checks"][k]["passed"] = c.passed
        d["passed"] = self.passed
        return d


def _rng(seed):
    return np.random.Generator(np.random.PCG64(seed))


def _random_coord(rng, radius=2.0):
    while True:
        mu1, mu2 = radius * (rng.standard_normal(2) + 1j * rng.standard_normal(2)) / np.sqrt(2)
        if abs(1 + mu1 * np.conj(mu2)) > 0.1:
            return GeodesicCoord(complex(mu1), complex(mu2))


def _random_tangent(rng, at):
    d = rng.standard_normal(4)
    return TangentLH(at, complex(d[0], d[1]), complex(d[2], d[3]))


# ------------------------------------------------------------ the psi chart


def psi(u):
    """The SL(2, C) parametrisation near the identity, ``u = (u1, u2, v1, v2)``."""
    u1, u2, v1, v2 = u
    a, b = u1 - 1j * v2, u2 + 1j * v1
    return np.array([[1, a + 1j * b], [a - 1j * b, 1 + a * a + b * b]], dtype=complex)


def dpsi(u, d):
    """Directional derivative of :func:`psi` at ``u`` along ``d``."""
    u1, u2, v1, v2 = u
    a, b = u1 - 1j * v2, u2 + 1j * v1
    da, db = d[0] - 1j * d[3], d[1] + 1j * d[2]
    return np.array([[0, da + 1j * db], [da - 1j * db, 2 * a * da + 2 * b * db]], dtype=complex)


def psi_coords_closed(u):
    """Closed-form ``(mu1, mu2)`` of the geodesic ``psi(u) . gamma_0``."""
    u1, u2, v1, v2 = u
    den = 1 + (u1 - 1j * v2) ** 2 + (u2 + 1j * v1) ** 2
    return -((u1 + 1j * u2) - (v1 + 1j * v2)) / den, (u1 + 1j * u2) + (v1 + 1j * v2)


def psi_coords(u):
    """``(mu1, mu2)`` of ``psi(u) . gamma_0`` via the unit-tangent lift."""
    a = psi(u)
    p = herm_vector(a @ a.conj().T)
    v = herm_vector(a @ SIGMA[3] @ a.conj().T)
    c = coords_of_ray(UnitTangent.from_vectors(p, v))
    return c.mu1, c.mu2


def _direction(x):
    """Real coordinate direction ``(Re xi, Im xi, Re eta, Im eta)``."""
    return np.array([x.xi.real, x.xi.imag, x.eta.real, x.eta.imag])


def contact_form(u, d):
    """``Theta(d psi~)`` at ``psi(u)``: ``<dp, v>`` with ``(p, v) = (a a*, a s3 a*)``."""
    a, da = psi(u), dpsi(u, d)
    dp = da @ a.conj().T + a @ da.conj().T
    v = a @ SIGMA[3] @ a.conj().T
    return float(inner_array(herm_vector(dp), herm_vector(v)))


def d_contact(x, y, h=1e-4):
    """Exterior derivative ``dTheta(x~, y~)`` at the origin by central differences.

    Uses the coordinate-field formula ``X(Theta(Y)) - Y(Theta(X))`` (the
    bracket vanishes), without the factor 1/2.
    """
    dx, dy = _direction(x), _direction(y)
    o = np.zeros(4)
    xy = (contact_form(o + h * dx, dy) - contact_form(o - h * dx, dy)) / (2 * h)
    yx = (contact_form(o + h * dy, dx) - contact_form(o - h * dy, dx)) / (2 * h)
    return xy - yx


def canonical_symplectic(x, y, h=1e-4):
    """``omega(x, y) = -dTheta(x~, y~) / 2``; see the README for the convention."""
    return -0.5 * d_contact(x, y, h)


# ------------------------------------------------------------------ checks


_BASIS = [HomogeneousTangent(1, 0), HomogeneousTangent(1j, 0), HomogeneousTangent(0, 1),
          HomogeneousTangent(0, 1j), HomogeneousTangent(1, 1j), HomogeneousTangent(1 + 2j, -0.5 + 1j)]


def verify_BG(h=1e-5, threshold=1e-6):
    """Compare ``G`` with ``-B`` on homogeneous tangents and the psi chart by finite differences."""
    dev = 0.0
    rows = []
    for x in _BASIS:
        g = eval_metric(homogeneous_to_coords(x)).g
        b = killing_form(x)
        rows.append({"xi": [x.xi.real, x.xi.imag], "eta": [x.eta.real, x.eta.imag],
                     "G": [g.real, g.imag], "minus_B": [-b.real, -b.imag]})
        dev = max(dev, abs(g + b))
        # dmu along psi-hat from the closed form and from the geometric lift
        d = _direction(x)
        cp, cm = np.array(psi_coords_closed(h * d)), np.array(psi_coords_closed(-h * d))
        lp, lm = np.array(psi_coords(h * d)), np.array(psi_coords(-h * d))
        dmu_closed = (cp - cm) / (2 * h)
        dmu_lift = (lp - lm) / (2 * h)
        t = homogeneous_to_coords(x)
        expected = np.array([t.dmu1, t.dmu2])
        dev = max(dev, np.max(np.abs(dmu_closed - expected)), np.max(np.abs(dmu_lift - expected)),
                  np.max(np.abs(cp - lp)))
    return VerificationReport("G = -B", {"G_vs_minus_B": Check(float(dev), threshold)}, len(_BASIS), {"basis": rows})


def verify_symplectic(seed=0, n_pairs=1000, n_fd=20, h=1e-4, threshold=1e-5, pointwise_threshold=1e-12):
    """Check ``omega_J = -omega_P`` pointwise and ``omega_J = 2 omega`` via finite-difference ``dTheta``."""
    rng = _rng(seed)
    pointwise = 0.0
    for _ in range(n_pairs):
        c = _random_coord(rng)
        x, y = _random_tangent(rng, c), _random_tangent(rng, c)
        oj, op = form_values(x, y)
        pointwise = max(pointwise, abs(oj + op) / max(1.0, abs(oj)))
    fd = 0.0
    rows = []
    pairs = [(HomogeneousTangent(1, 0), HomogeneousTangent(0, 1))]
    for _ in range(n_fd):
        z = rng.standard_normal(8)
        pairs.append((HomogeneousTangent(complex(z[0], z[1]), complex(z[2], z[3])),
                      HomogeneousTangent(complex(z[4], z[5]), complex(z[6], z[7]))))
    for x, y in pairs:
        oj, _ = form_values(homogeneous_to_coords(x), homogeneous_to_coords(y))
        two_omega = 2 * canonical_symplectic(x, y, h)
        fd = max(fd, abs(two_omega - oj))
        rows.append({"omega_J": oj, "two_omega": two_omega})
    checks = {"omega_J_plus_omega_P": Check(float(pointwise), pointwise_threshold),
              "dTheta_vs_omega_J": Check(float(fd), threshold)}
    return VerificationReport("omega_J = -omega_P = 2 omega", checks, n_pairs + len(pairs), {"pairs": rows[:3]})


def verify_metric_invariance(seed=0, n_maps=100, threshold=1e-8):
    """``G`` is preserved by the Moebius pushforward (relative error)."""
    rng = _rng(seed)
    dev, used = 0.0, 0
    while used < n_maps:
        a = random_sl2(rng, 0.7)
        c = _random_coord(rng)
        x, y = _random_tangent(rng, c), _random_tangent(rng, c)
        try:
            ax, ay = moebius_on_LH(a, x), moebius_on_LH(a, y)
        except ChartBoundaryError:
            continue
        if ax.at.margin < 1e-3:
            continue
        g0, g1 = eval_metric(x, y).g, eval_metric(ax, ay).g
        dev = max(dev, abs(g1 - g0) / max(abs(g0), 1e-300))
        used += 1
    return VerificationReport("G_theta Moebius invariance", {"relative_error": Check(float(dev), threshold)}, used)


def verify_standard_embedding(seed=0, n_points=100, threshold=1e-10):
    """Along ``mu -> (mu, mu)`` the pulled-back ``G^r`` is the round metric ``4|dmu|^2/(1+|mu|^2)^2``."""
    rng = _rng(seed)
    dev = 0.0
    for _ in range(n_points):
        mu = complex(*rng.standard_normal(2) * 2)
        dmu = complex(*rng.standard_normal(2))
        g = eval_metric(TangentLH(GeodesicCoord(mu, mu), dmu, dmu))
        sphere = 4 * abs(dmu) ** 2 / (1 + abs(mu) ** 2) ** 2
        dev = max(dev, abs(g.gr - sphere) / sphere, abs(g.gi) / sphere)
    return VerificationReport("standard embedding isometry", {"relative_error": Check(float(dev), threshold)}, n_points)


def run_all(seed=0):
    """All structural checks, in a fixed order."""
    return [
        verify_symplectic(seed),
        verify_BG(),
        verify_metric_invariance(seed),
        verify_standard_embedding(seed),
    ]
