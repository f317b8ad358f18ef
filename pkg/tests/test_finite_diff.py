import numpy as np
import pytest
from hypothesis import given, strategies as st

from hypflat.finite_diff import derivative, derivative_uniform, fornberg_weights


def test_central_weights_are_classical():
    assert np.allclose(fornberg_weights((-1, 0, 1), 1), [-0.5, 0, 0.5])
    assert np.allclose(fornberg_weights((-1, 0, 1), 2), [1, -2, 1])
    assert np.allclose(fornberg_weights((-2, -1, 0, 1, 2), 1), [1 / 12, -2 / 3, 0, 2 / 3, -1 / 12])
    assert np.allclose(fornberg_weights((0, 1, 2), 1), [-1.5, 2, -0.5])


@given(st.integers(1, 3), st.integers(3, 7))
def test_weights_differentiate_polynomials_exactly(order, n):
    offs = tuple(range(-(n // 2), n - n // 2))
    w = fornberg_weights(offs, order)
    x = np.array(offs, float)
    for k in range(n):
        exact = 0.0 if k < order else np.prod(range(k - order + 1, k + 1)) * 0.0 ** (k - order)
        assert np.dot(w, x ** k) == pytest.approx(exact, abs=1e-9)


@given(st.floats(-2, 2))
def test_derivative_of_callable(s):
    assert derivative(np.sin, s, h=1e-3) == pytest.approx(np.cos(s), abs=1e-10)
    assert derivative(np.sin, s, h=1e-2, order=2, accuracy=6) == pytest.approx(-np.sin(s), abs=1e-8)


def test_derivative_stays_inside_bounds():
    def f(x):
        assert 0 <= x <= 1 + 1e-12
        return np.exp(x)

    assert derivative(f, 0.0, h=1e-3, lo=0, hi=1) == pytest.approx(1, abs=1e-9)
    assert derivative(f, 1.0, h=1e-3, lo=0, hi=1) == pytest.approx(np.e, abs=1e-8)


def test_derivative_of_vector_valued_callable():
    d = derivative(lambda x: np.array([x ** 2, np.exp(x)]), 1.0, h=1e-3)
    assert np.allclose(d, [2, np.e], atol=1e-9)


@pytest.mark.parametrize("order, accuracy, tol", [(1, 4, 1e-7), (1, 8, 1e-11), (2, 6, 1e-8), (3, 8, 1e-6)])
def test_uniform_derivative_including_ends(order, accuracy, tol):
    x = np.linspace(0, 2, 401)
    d = derivative_uniform(np.sin(x), x[1] - x[0], order, accuracy)
    exact = [np.cos, lambda z: -np.sin(z), lambda z: -np.cos(z)][order - 1](x)
    assert np.max(np.abs(d - exact)) < tol


def test_uniform_derivative_along_axis():
    x = np.linspace(0, 1, 101)
    y = np.stack([x ** 2, x ** 3], axis=1)
    d = derivative_uniform(y.T, x[1] - x[0], axis=1)
    assert np.allclose(d, np.stack([2 * x, 3 * x ** 2]), atol=1e-10)


def test_uniform_derivative_needs_enough_samples():
    with pytest.raises(ValueError):
        derivative_uniform(np.arange(4.0), 1.0, 1, 8)
