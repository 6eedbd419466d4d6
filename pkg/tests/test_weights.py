import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wleja.errors import DomainError
from wleja.weights import (
    FreudWeight,
    contraction_factor,
    external_field,
    mrs_number,
    mrs_number_quadrature,
    phi_n,
    phi_n_symmetric,
    weight_value,
)

alphas = st.floats(min_value=1.05, max_value=6.0)


def test_weight_values():
    assert weight_value(FreudWeight(2), 0.0) == 1.0
    assert weight_value(FreudWeight(2), 1.0) == pytest.approx(0.36787944, abs=1e-8)
    assert weight_value(FreudWeight(3), -2.0) == pytest.approx(math.exp(-8), rel=1e-15)


def test_external_field_values():
    assert external_field(FreudWeight(2), 0.0) == 0.0
    assert external_field(FreudWeight(3), -2.0) == pytest.approx(8.0, rel=1e-15)
    assert external_field(FreudWeight(1.5), 4.0) == pytest.approx(8.0, rel=1e-15)


@pytest.mark.parametrize("bad", [1.0, 0.9, -2.0, float("nan"), float("inf")])
def test_alpha_must_exceed_one(bad):
    with pytest.raises(DomainError):
        FreudWeight(bad)


@pytest.mark.parametrize("x", [float("nan"), float("inf"), -float("inf")])
def test_non_finite_x_rejected(x):
    fw = FreudWeight(2)
    with pytest.raises(DomainError):
        weight_value(fw, x)
    with pytest.raises(DomainError):
        external_field(fw, x)


@given(alphas, st.floats(min_value=-50, max_value=50))
def test_weight_is_exp_minus_field(alpha, x):
    fw = FreudWeight(alpha)
    w = weight_value(fw, x)
    assert 0 <= w <= 1
    assert w == pytest.approx(math.exp(-external_field(fw, x)), rel=1e-15, abs=1e-300)


def test_mrs_number_values():
    assert mrs_number(FreudWeight(2), 4) == pytest.approx(2.0, rel=1e-14)
    assert mrs_number(FreudWeight(2), 1) == pytest.approx(1.0, rel=1e-14)
    assert mrs_number(FreudWeight(4), 1) == pytest.approx(0.90360, abs=5e-6)


def test_mrs_quadrature_values():
    assert mrs_number_quadrature(FreudWeight(2), 100, 1e-10) == pytest.approx(10.0, abs=1e-9)
    assert mrs_number_quadrature(FreudWeight(2), 1, 1e-10) == pytest.approx(1.0, abs=1e-9)
    a16 = mrs_number_quadrature(FreudWeight(4), 16, 1e-10)
    assert a16 == pytest.approx(2 * mrs_number_quadrature(FreudWeight(4), 1, 1e-10), rel=1e-9)
    assert a16 == pytest.approx(1.80720, abs=1e-5)


@pytest.mark.parametrize("alpha", [1.5, 2.0, 3.0, 4.0])
@pytest.mark.parametrize("n", [1, 10, 100])
def test_closed_form_matches_quadrature(alpha, n):
    fw = FreudWeight(alpha)
    a = mrs_number(fw, n)
    assert abs(a - mrs_number_quadrature(fw, n, 1e-10)) / a <= 1e-8


@settings(max_examples=50)
@given(alphas, st.integers(min_value=1, max_value=10_000))
def test_mrs_scaling_and_support_radius(alpha, n):
    fw = FreudWeight(alpha)
    a_n = mrs_number(fw, n)
    assert a_n == pytest.approx(n ** (1 / alpha) * mrs_number(fw, 1), rel=1e-10)
    assert n ** (-1 / alpha) * a_n == pytest.approx(fw.support_radius_c, rel=1e-10)


def test_contraction_factor():
    assert contraction_factor(FreudWeight(2), 4) == pytest.approx(0.5, rel=1e-15)
    assert contraction_factor(FreudWeight(4), 16) == pytest.approx(0.5, rel=1e-15)


@pytest.mark.parametrize("n", [2, 4, 8, 16])
@pytest.mark.parametrize("alpha", [1.5, 2.0, 3.0])
def test_homogeneity(alpha, n):
    fw = FreudWeight(alpha)
    x = np.linspace(-3, 3, 1000)
    q_scaled = external_field(fw, n ** (1 / alpha) * x)
    np.testing.assert_allclose(q_scaled, n * external_field(fw, x), rtol=1e-12, atol=1e-300)
    np.testing.assert_allclose(weight_value(fw, x), weight_value(fw, n ** (-1 / alpha) * x) ** n, rtol=1e-12)


def test_phi_n_values():
    fw = FreudWeight(2)
    z1 = 2 ** (-2 / 3)
    assert phi_n(fw, 1, 0.0) == pytest.approx(2 / math.sqrt(1 - z1**2), rel=1e-13)
    assert phi_n(fw, 1, 0.0) == pytest.approx(2.5752383, abs=1e-7)
    assert phi_n(fw, 1, math.sqrt(2)) == pytest.approx(0.0, abs=1e-15)
    z4 = 8 ** (-2 / 3)
    assert phi_n(fw, 4, 0.0) == pytest.approx(1 / math.sqrt(1 - z4**2), rel=1e-13)


def test_phi_n_domain_error_near_left_edge():
    fw = FreudWeight(2)
    with pytest.raises(DomainError, match=r"\|t \+ a_n\|"):
        phi_n(fw, 1, -0.9)


@pytest.mark.parametrize("n", [1, 5, 50])
def test_phi_n_positive_inside(n):
    fw = FreudWeight(2)
    a2n = mrs_number(fw, 2 * n)
    a_n = mrs_number(fw, n)
    t = np.linspace(-a_n * 0.3, a2n * 0.999, 200)
    assert np.all(phi_n(fw, n, t) > 0)
    t = np.linspace(-a2n * 0.999, a2n * 0.999, 200)
    assert np.all(phi_n_symmetric(fw, n, t) > 0)
