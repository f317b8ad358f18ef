import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import finite, make_rng, seeds
from hypflat.errors import ContractViolation, InvalidMapError
from hypflat.lorentz import (
    SIGMA,
    BallPoint,
    HermMat,
    HPoint,
    HTangent,
    MoebiusMap,
    UnitTangent,
    UpperHalfPoint,
    act_isometry,
    cross,
    det_array,
    from_ball,
    from_upper,
    geodesic_flow,
    geodesic_ray,
    hyperbolic_distance,
    minkowski_inner,
    random_sl2,
    random_unit_tangent,
    sigma,
    to_ball,
    to_upper,
)

E = np.e
P_E = HPoint.from_vector([np.cosh(1), 0, 0, np.sinh(1)])
S0 = HPoint(sigma(0))


def tangent(p, v):
    return HTangent(p, HermMat.from_vector(v))


def test_matrix_view_is_sigma_combination():
    x = HermMat(1.5, -2.0, 0.25, 3.0)
    m = x.matrix
    expected = np.array([[1.5 + 3.0, -2.0 + 0.25j], [-2.0 - 0.25j, 1.5 - 3.0]])
    assert np.array_equal(m, expected)
    assert HermMat.from_matrix(m) == x


def test_inner_product_of_basis_elements():
    assert minkowski_inner(sigma(0), sigma(0)) == -1
    assert minkowski_inner(sigma(3), sigma(3)) == 1
    assert minkowski_inner(sigma(0), HermMat.from_matrix(np.diag([E, 1 / E]))) == pytest.approx(-np.cosh(1), abs=1e-14)


@given(st.lists(finite, min_size=4, max_size=4))
def test_inner_square_is_minus_det(v):
    x = HermMat.from_vector(v)
    assert minkowski_inner(x, x) == pytest.approx(-np.linalg.det(x.matrix).real, abs=1e-12)
    assert minkowski_inner(x, x) == pytest.approx(-x.det, abs=1e-12)


@given(st.lists(finite, min_size=8, max_size=8))
def test_inner_is_half_trace_with_cofactor(v):
    x, y = HermMat.from_vector(v[:4]), HermMat.from_vector(v[4:])
    ym = y.matrix
    cof = np.array([[ym[1, 1], -ym[0, 1]], [-ym[1, 0], ym[0, 0]]])
    assert minkowski_inner(x, y) == pytest.approx(-0.5 * np.trace(x.matrix @ cof).real, abs=1e-12)


PAULI = [np.array(m, complex) for m in ([[0, 1], [1, 0]], [[0, -1j], [1j, 0]], [[1, 0], [0, -1]])]


def test_sigma_basis_matches_matrix_view():
    for k in range(4):
        assert np.array_equal(sigma(k).matrix, SIGMA[k])
    assert np.array_equal(SIGMA[2], -PAULI[1])


def test_cross_product_of_pauli_matrices():
    # (i/2)(X Y - Y X) at the identity, evaluated by hand
    p1, p2, p3 = (tangent(S0, HermMat.from_matrix(m).vector) for m in PAULI)
    assert np.allclose(cross(S0, p1, p1).vector, 0)
    assert np.allclose(cross(S0, p1, p2).matrix, -PAULI[2], atol=1e-15)
    assert np.allclose(cross(S0, p2, p3).matrix, -PAULI[0], atol=1e-15)


def test_cross_product_in_sigma_coordinates():
    t1, t2, t3 = (tangent(S0, sigma(k).vector) for k in (1, 2, 3))
    assert np.allclose(cross(S0, t1, t2).vector, sigma(3).vector, atol=1e-15)
    assert np.allclose(cross(S0, t2, t3).vector, sigma(1).vector, atol=1e-15)


def test_cross_rejects_mismatched_base_points():
    with pytest.raises(ContractViolation):
        cross(S0, tangent(S0, [0, 1, 0, 0]), tangent(P_E, [0, 1, 0, 0]))


@given(seeds)
def test_cross_is_orthogonal_and_antisymmetric(seed):
    rng = make_rng(seed)
    pv = random_unit_tangent(rng)
    p = pv.p.vector
    x, y = rng.normal(size=(2, 4))
    # project onto T_p
    x = x + minkowski_inner(x, p) * p
    y = y + minkowski_inner(y, p) * p
    z = cross(p, x, y)
    scale = max(1.0, np.abs(x).max() * np.abs(y).max() * np.abs(p).max() ** 2)
    for w in (x, y, p):
        assert abs(minkowski_inner(z, w)) < 1e-10 * scale
    assert np.allclose(z, -cross(p, y, x), atol=1e-12 * scale)


def test_isometry_examples():
    assert act_isometry(MoebiusMap.identity(), S0) == S0
    a = MoebiusMap(np.sqrt(E), 0, 0, 1 / np.sqrt(E))
    assert np.allclose(act_isometry(a, S0).matrix, np.diag([E, 1 / E]), atol=1e-14)


def test_isometry_rejects_non_unimodular_map():
    with pytest.raises(InvalidMapError):
        MoebiusMap(2, 0, 0, 1)


@given(seeds)
def test_isometry_preserves_tangent_inner_products(seed):
    rng = make_rng(seed)
    a = random_sl2(rng)
    pv = random_unit_tangent(rng)
    p = pv.p.vector
    x, y = rng.normal(size=(2, 4))
    x = x + minkowski_inner(x, p) * p
    y = y + minkowski_inner(y, p) * p
    before = minkowski_inner(x, y)
    after = minkowski_inner(act_isometry(a, x), act_isometry(a, y))
    scale = max(1.0, abs(before), np.abs(x).max() * np.abs(y).max())
    assert abs(after - before) < 1e-10 * scale * np.abs(a.matrix).max() ** 4
    q = act_isometry(a, pv.p)
    assert q.m.det == pytest.approx(1, rel=1e-10) and q.m.trace > 0


def test_model_conversion_examples():
    assert to_upper(S0) == UpperHalfPoint(0, 1)
    u = to_upper(P_E)
    assert abs(u.w) < 1e-15 and u.r == pytest.approx(E, rel=1e-14)
    b = to_ball(S0)
    assert (b.x, b.y, b.z) == (0, 0, 0)


@given(seeds)
def test_upper_and_ball_round_trip(seed):
    rng = make_rng(seed)
    for _ in range(20):
        p = random_unit_tangent(rng).p
        scale = np.abs(p.vector).max()
        assert np.allclose(from_upper(to_upper(p)).vector, p.vector, rtol=1e-12, atol=1e-12 * scale)
        assert np.allclose(from_ball(to_ball(p)).vector, p.vector, rtol=1e-12, atol=1e-11 * scale ** 2)


def test_model_point_validation():
    with pytest.raises(ContractViolation):
        UpperHalfPoint(0, 0)
    with pytest.raises(ContractViolation):
        BallPoint(1, 0, 0)
    with pytest.raises(ContractViolation):
        HPoint.from_vector([2, 0, 0, 0])
    with pytest.raises(ContractViolation):
        HTangent(S0, sigma(0))


def test_distance_examples():
    assert hyperbolic_distance(S0, S0) == 0
    assert hyperbolic_distance(S0, P_E) == pytest.approx(1, abs=1e-14)


def test_distance_rejects_non_points():
    with pytest.raises(ContractViolation):
        hyperbolic_distance([1, 0, 0, 0], [0.5, 0, 0, 0])


@given(seeds, st.floats(-4, 4))
def test_geodesic_ray_is_unit_speed(seed, t):
    pv = random_unit_tangent(make_rng(seed))
    q = geodesic_ray(pv, t)
    assert det_array(q.vector) == pytest.approx(1, rel=1e-9)
    assert hyperbolic_distance(pv.p, q) == pytest.approx(abs(t), abs=1e-9 * max(1, np.abs(pv.p.vector).max() ** 2))


def test_geodesic_ray_examples():
    pv = UnitTangent(S0, tangent(S0, [0, 0, 0, 1]))
    assert geodesic_ray(pv, 0) == S0
    assert np.allclose(geodesic_ray(pv, 1).matrix, np.diag([E, 1 / E]), atol=1e-14)


@given(seeds, st.floats(-2, 2), st.floats(-2, 2))
def test_geodesic_flow_property(seed, s, t):
    pv = random_unit_tangent(make_rng(seed))
    a = geodesic_ray(pv, s + t).vector
    b = geodesic_ray(geodesic_flow(pv, s), t).vector
    assert np.allclose(a, b, rtol=1e-9, atol=1e-9 * np.abs(a).max())
