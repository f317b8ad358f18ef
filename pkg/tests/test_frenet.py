import numpy as np
import pytest

from hypflat.curves import builtin_curve
from hypflat.developable import generate_surface, surface_kernel
from hypflat.frenet import frenet_apparatus
from hypflat.lorentz import cross_array, inner_array


def helix_points(n=1024, kappa=1.0, tau=1.0):
    c = builtin_curve("nomizu3", kappa=kappa, tau=tau)
    s = np.linspace(*c.domain, n)
    mu1, mu2 = c.mu_array(s)
    d1, d2 = c.dmu_array(s)
    return s, surface_kernel(mu1, mu2, d1, d2, c.base_time_array(s))[0]


def test_geodesic_has_zero_curvature():
    s = np.linspace(-1, 1, 101)
    pts = np.stack([np.cosh(s), 0 * s, 0 * s, np.sinh(s)], -1)
    fr = frenet_apparatus(pts, s)
    assert np.max(fr.kappa) < 1e-6
    assert not fr.torsion_defined.any() and np.isnan(fr.tau).all()


def test_horocycle_has_unit_curvature():
    # orbit of s0 under a parabolic subgroup
    s = np.linspace(-1, 1, 201)
    pts = np.stack([1 + s ** 2 / 2, s, 0 * s, s ** 2 / 2], -1)
    fr = frenet_apparatus(pts, s)
    assert np.allclose(fr.kappa, 1, atol=1e-8)
    assert np.allclose(fr.tau, 0, atol=1e-8)


def test_cone_base_curve():
    c = builtin_curve("nomizu2", speed=2.0, domain=[0, np.pi])
    g = generate_surface(c, None, (-1, 1), 512, 9)
    pts = g.f[:, 4]
    fr = frenet_apparatus(pts, g.s)
    assert np.allclose(fr.kappa, np.sqrt(5), atol=1e-5)
    assert np.allclose(fr.tau, 0, atol=1e-5)


@pytest.mark.parametrize("kappa, tau", [(1.0, 1.0), (0.5, 2.0), (2.0, 0.3)])
def test_helix_curvature_and_torsion(kappa, tau):
    s, pts = helix_points(kappa=kappa, tau=tau)
    fr = frenet_apparatus(pts, s)
    mid = slice(40, -40)
    assert np.max(np.abs(fr.kappa[mid] - kappa)) < 1e-3
    assert np.max(np.abs(fr.tau[mid] - tau)) < 1e-3


def test_frame_is_orthonormal_and_positively_oriented():
    s, pts = helix_points()
    fr = frenet_apparatus(pts, s)
    for x in (fr.e, fr.n, fr.b):
        assert np.max(np.abs(inner_array(x, x) - 1)) < 1e-7
        assert np.max(np.abs(inner_array(x, pts))) < 1e-7
    for x, y in ((fr.e, fr.n), (fr.n, fr.b), (fr.e, fr.b)):
        assert np.max(np.abs(inner_array(x, y))) < 1e-7
    assert np.max(np.abs(fr.b - cross_array(pts, fr.e, fr.n))) < 1e-7


def test_curvature_is_parametrization_invariant():
    s, pts = helix_points(2048)
    fr = frenet_apparatus(pts, s)
    u = np.linspace(-1, 1, 2048)
    # s = 2 pi u^3 + 4 pi u is monotone with s(+-1) = +-6 pi ... keep inside the domain
    s2 = 2 * np.pi * (u ** 3 + u) / 2 * 0.9
    c = builtin_curve("nomizu3")
    mu1, mu2 = c.mu_array(s2)
    d1, d2 = c.dmu_array(s2)
    pts2 = surface_kernel(mu1, mu2, d1, d2, c.base_time_array(s2))[0]
    fr2 = frenet_apparatus(pts2, u)
    mid = slice(60, -60)
    assert np.max(np.abs(fr2.kappa[mid] - 1)) < 1e-3 and np.max(np.abs(fr2.tau[mid] - 1)) < 1e-3
