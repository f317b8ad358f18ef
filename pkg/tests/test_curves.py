import numpy as np
import pytest
from hypothesis import assume, given, strategies as st

from conftest import make_rng, seeds
from hypflat.curves import (
    BUILTIN_DEFAULTS,
    ExampleParams,
    LCurve,
    builtin_curve,
    classify_curve,
    curve_derivative,
    helix_constants,
    sampled_curve,
)
from hypflat.developable import moebius_curve
from hypflat.errors import ChartBoundaryError, CurveSpecError, InvalidParameterError
from hypflat.geodesics import INFINITY
from hypflat.lorentz import random_sl2


def witness():
    return LCurve(lambda s: (s + 0j, 1j * s), (-1.0, 1.0), lambda s: (np.ones_like(s) + 0j, 1j * np.ones_like(s)),
                  grid=65, name="witness")


def test_builtin_values_at_zero():
    c = builtin_curve("nomizu2").eval(0.0)
    assert (c.mu1, c.mu2) == (0.5, 0)
    c = builtin_curve("nomizu1").eval(0.0)
    assert c.mu1 == pytest.approx(-1 / 3) and c.mu2 == pytest.approx(1 / 3)


def test_helix_constants_for_unit_curvature_and_torsion():
    ap, am, Ap, Am = helix_constants(1.0, 1.0)
    assert ap == pytest.approx(np.sqrt(5)) and am == pytest.approx(1)
    assert Ap == pytest.approx(np.sqrt(np.sqrt(5) - 1)) and Ap == pytest.approx(1.111786, abs=1e-6)
    assert Am == pytest.approx(np.sqrt(np.sqrt(5) + 1)) and Am == pytest.approx(1.798907, abs=1e-6)


@given(st.floats(0.05, 3), st.floats(-3, 3))
def test_helix_constants_are_real_for_all_helices(kappa, tau):
    ap, am, Ap, Am = helix_constants(kappa, tau)
    assert np.isfinite([Ap, Am]).all()
    # A+^2 - A-^2 = 2(1 - kappa^2 - tau^2) and A+ A- = 2|kappa tau|... only the first is needed
    assert Ap ** 2 - Am ** 2 == pytest.approx(2 * (1 - kappa ** 2 - tau ** 2), abs=1e-9)


def test_builtin_parameter_validation():
    with pytest.raises(InvalidParameterError):
        builtin_curve("nomizu1", radius=1.2)
    with pytest.raises(InvalidParameterError):
        builtin_curve("nomizu3", kappa=-1)
    with pytest.raises(InvalidParameterError):
        builtin_curve("nomizu2", shape="square")
    with pytest.raises(InvalidParameterError):
        builtin_curve(ExampleParams("nomizu1", {"colour": 1}))
    with pytest.raises(InvalidParameterError):
        builtin_curve("spiral")


def test_curve_leaving_chart_is_reported_with_parameter():
    with pytest.raises(ChartBoundaryError, match="s = "):
        LCurve(lambda s: (1j + 0 * s, -1j + 0.5 * s), (0.0, 1.0))


def test_derivative_examples():
    d = curve_derivative(builtin_curve("nomizu2"), 0.0)
    assert (d.dmu1, d.dmu2) == (0.5j, 0)
    const = LCurve(lambda s: (0.2 + 0 * s, 0.1j + 0 * s), (0.0, 1.0), grid=16)
    d = curve_derivative(const, 0.5)
    assert abs(d.dmu1) < 1e-12 and abs(d.dmu2) < 1e-12
    assert classify_curve(const).verdict == "irregular"


def test_finite_differences_match_analytic_derivative():
    c = builtin_curve("nomizu1")
    fd = LCurve(c.mu, c.domain, grid=c.grid)
    s = np.linspace(*c.domain, 100)
    for a, b in zip(c.dmu_array(s), fd.dmu_array(s)):
        assert np.max(np.abs(a - b)) < 1e-8
    assert classify_curve(fd).finite_difference


def test_derivative_outside_domain_is_rejected():
    with pytest.raises(InvalidParameterError):
        curve_derivative(builtin_curve("nomizu2"), 10.0)


def test_classification_numbers():
    r1 = classify_curve(builtin_curve("nomizu1"))
    assert r1.verdict == "developable"
    assert np.max(np.abs(r1.G.imag)) < 1e-10
    assert np.max(np.abs(r1.G.real + 0.5625)) < 1e-10
    r2 = classify_curve(builtin_curve("nomizu2"))
    assert np.all(r2.G == 0)
    assert r2.verdict == "ideal-cone" and r2.vertex is INFINITY
    r3 = classify_curve(witness())
    assert r3.verdict == "non-developable"
    assert r3.G[32] == pytest.approx(-4j)


@pytest.mark.parametrize("name", sorted(BUILTIN_DEFAULTS))
def test_builtins_are_developable(name):
    r = classify_curve(builtin_curve(name))
    assert r.verdict in ("developable", "ideal-cone")
    assert r.null_gi.all() and r.causal_gr.all() and r.regular.all()


def test_nra_is_developable_but_not_a_cone():
    c = builtin_curve("nra")
    r = classify_curve(c)
    assert r.verdict == "developable" and r.vertex is None
    s = c.samples()
    d1, d2 = c.dmu_array(s)
    assert np.abs(d1).max() > 0.1 and np.abs(d2).max() > 0.1
    # the two ends share one endpoint each
    m1, m2 = c.mu_array(s)
    assert np.all(m1[s <= -1] == 0) and np.all(m2[s >= 1] == 0)


def test_nra_derivatives_are_continuous_across_breakpoints():
    c = builtin_curve("nra")
    for b in c.breakpoints:
        for k in (0, 1):
            lo, hi = c.dmu_array(np.array([b - 1e-7, b + 1e-7]))[k]
            assert abs(lo - hi) < 1e-5


def test_nra_fd_fallback_respects_breakpoints():
    c = builtin_curve("nra")
    fd = LCurve(c.mu, c.domain, grid=c.grid, breakpoints=c.breakpoints)
    s = np.linspace(-2.9, 2.9, 200)
    for a, b in zip(c.dmu_array(s), fd.dmu_array(s)):
        assert np.max(np.abs(a - b)) < 1e-6


@given(seeds)
def test_verdict_is_moebius_invariant(seed):
    rng = make_rng(seed)
    c = builtin_curve("nomizu1", grid=128)
    a = random_sl2(rng, 0.3)
    try:
        image = moebius_curve(a, c)
    except ChartBoundaryError:
        assume(False)
    r0, r1 = classify_curve(c), classify_curve(image)
    assert r0.verdict == r1.verdict
    assert np.max(np.abs(r0.G - r1.G)) < 1e-8 * max(1, np.abs(r0.G).max())


@given(st.floats(0.3, 3.0), st.floats(-1, 1))
def test_verdict_is_reparametrization_invariant(scale, shift):
    c = builtin_curve("nomizu1", grid=128)
    phi = lambda s: scale * s + shift
    r = LCurve(lambda s: c.mu(phi(s)), ((0 - shift) / scale, (2 * np.pi - shift) / scale),
               lambda s: tuple(scale * d for d in c.dmu(phi(s))), grid=128)
    r0, r1 = classify_curve(c), classify_curve(r)
    assert r0.verdict == r1.verdict
    assert np.allclose(r1.G, scale ** 2 * r0.G, atol=1e-12)


@given(st.floats(0.1, 0.9), st.floats(-2, 2), st.floats(-2, 2))
def test_plane_curves_give_ideal_cones(radius, cx, cy):
    c = builtin_curve("nomizu2", radius=radius, center=[cx, cy], grid=64)
    r = classify_curve(c)
    assert r.verdict == "ideal-cone" and r.vertex is INFINITY


def test_sampled_curve_interpolates_and_classifies():
    src = builtin_curve("nomizu1")
    s = np.linspace(0, 2 * np.pi, 400)
    mu1, mu2 = src.mu_array(s)
    c = sampled_curve(s, mu1, mu2)
    x = np.linspace(0.1, 6.0, 57)
    assert np.max(np.abs(c.mu_array(x)[0] - src.mu_array(x)[0])) < 1e-5
    r = classify_curve(c, tol=1e-3)
    assert r.verdict == "developable"


def test_sampled_curve_rejects_bad_input():
    with pytest.raises(CurveSpecError):
        sampled_curve([0, 0, 1], [0, 0, 0], [0, 0, 0])
    with pytest.raises(CurveSpecError):
        sampled_curve([0, 1], [0], [0, 0])
