import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from wleja._search import bisect_decreasing_root, golden_section_max, maximize_on_intervals


def test_golden_section_parabola():
    x, fx = golden_section_max(lambda t: -(t - 0.3) ** 2, np.array([0.0]), np.array([1.0]), 1e-12)
    assert x[0] == pytest.approx(0.3, abs=1e-6)
    assert fx[0] == pytest.approx(0.0, abs=1e-12)


def test_golden_section_vectorised():
    centres = np.array([0.1, 0.5, 0.9])
    a, b = np.zeros(3), np.ones(3)
    x, _ = golden_section_max(lambda t: -np.abs(t - centres), a, b, 1e-12)
    np.testing.assert_allclose(x, centres, atol=1e-10)


@given(st.floats(min_value=-5, max_value=5))
def test_bisect_linear_root(r):
    x = bisect_decreasing_root(lambda t: r - t, np.array([-10.0]), np.array([10.0]))
    assert x[0] == pytest.approx(r, abs=1e-12)


def test_maximize_on_intervals_polish():
    # flat peak: value resolves x only to sqrt(eps) without the derivative
    f = lambda t: -((t - 0.25) ** 2)
    df = lambda t: -2 * (t - 0.25)
    x, fx = maximize_on_intervals(f, np.array([0.0, 1.0]), probes=8, xtol=1e-14, df=df)
    assert abs(x[0] - 0.25) < 1e-13


def test_maximize_on_intervals_rejects_coarse_grid():
    with pytest.raises(ValueError):
        maximize_on_intervals(np.sin, np.array([0.0, 1.0]), probes=3)
