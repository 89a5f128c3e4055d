import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from circone.cones.fejer_riesz import (
    NotNonnegativeError,
    autocorrelation,
    cosine_polynomial,
    fejer_riesz_factor,
    min_cosine_polynomial,
)


def padded_autocorrelation(c, n):
    r = autocorrelation(c)
    return np.pad(r, (0, n - r.size))


def test_cosine_polynomial_values():
    assert cosine_polynomial([1, 0.5], 0.0) == pytest.approx(2.0)
    assert cosine_polynomial([1, 0.5], math.pi) == pytest.approx(0.0)
    t = np.linspace(0, math.pi, 7)
    assert np.allclose(cosine_polynomial([3, 1, 0.5], t), 3 + 2 * np.cos(t) + np.cos(2 * t))


def test_autocorrelation_example():
    assert np.allclose(autocorrelation([1, 2, 3]), [14, 8, 3])


def test_factor_examples():
    assert np.allclose(fejer_riesz_factor([4.0]), [2.0])
    assert np.allclose(np.abs(fejer_riesz_factor([2.0, 1.0])), [1, 1], atol=1e-9)
    assert np.allclose(padded_autocorrelation(fejer_riesz_factor([1.0, 0.0, 0.0]), 3), [1, 0, 0], atol=1e-12)


def test_factor_of_zero_polynomial_at_boundary():
    # 1 + cos theta has a double root on the circle
    c = fejer_riesz_factor([1.0, 0.5])
    assert np.allclose(autocorrelation(c), [1.0, 0.5], atol=1e-8)


@given(arrays(float, st.integers(1, 7), elements=st.floats(-3, 3, allow_nan=False)))
@settings(max_examples=120, deadline=None)
def test_factor_round_trip(c0):
    a = autocorrelation(c0)
    if a[0] < 1e-3:
        return
    c = fejer_riesz_factor(a)
    assert np.allclose(padded_autocorrelation(c, a.size), a, atol=1e-7 * max(1, a[0]))


def test_rejects_negative_polynomial():
    with pytest.raises(NotNonnegativeError) as err:
        fejer_riesz_factor([1.0, 1.0])
    assert err.value.theta == pytest.approx(math.pi, abs=1e-6)
    assert err.value.value == pytest.approx(-1.0, abs=1e-9)


def test_min_cosine_polynomial_finds_interior_minimum():
    # 1 - 1.2 cos t + 0.5 cos 2t, minimum at cos t = 0.6
    val, t = min_cosine_polynomial([1.0, -0.6, 0.25])
    grid = np.linspace(0, math.pi, 200001)
    assert val == pytest.approx(cosine_polynomial([1.0, -0.6, 0.25], grid).min(), abs=1e-9)
    assert math.cos(t) == pytest.approx(0.6, abs=1e-6)


def test_bad_input():
    with pytest.raises(ValueError):
        fejer_riesz_factor([])
