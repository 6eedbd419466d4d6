"""Equilibrium measure checks.

The independent oracle: mu_w for |x|^alpha is the mixture
int_0^1 alpha s^(alpha-1) Arcsine[-cs, cs] ds, which gives the density
constant alpha/(pi c), F_w = log(2/c) + 1/alpha and int Q dmu_w = 1/(2 alpha).
"""

import math

import numpy as np
import pytest
from scipy import integrate

from wleja.errors import DomainError
from wleja.leja import DiscreteMeasure
from wleja.potential import (
    energy,
    equilibrium_density,
    equilibrium_measure,
    log_potential,
    robin_constant,
    density_profile,
    variational_deviation,
)
from wleja.weights import FreudWeight

ALPHAS = [1.5, 2.0, 3.0, 4.0]
# F_w for alpha = 4 from scipy.quad of the equilibrium density (scale fixed by unit mass)
ROBIN_ALPHA4 = 1.0445134575857908


def mixture_robin(alpha):
    return math.log(2 / FreudWeight(alpha).support_radius_c) + 1 / alpha


def mixture_cdf(alpha, t):
    c = FreudWeight(alpha).support_radius_c
    g = lambda s: alpha * s ** (alpha - 1) * (0.5 + math.asin(max(-1.0, min(1.0, t / (c * s)))) / math.pi)
    return integrate.quad(g, 0, 1, points=[min(1.0, abs(t) / c)] if t else None, limit=200)[0]


def test_semicircle_values():
    assert equilibrium_density(2.0, 0.0) == pytest.approx(2 / math.pi, abs=1e-10)
    assert equilibrium_density(2.0, 0.6) == pytest.approx(0.8 * 2 / math.pi, abs=1e-10)
    assert equilibrium_density(2.0, 1.0) == 0.0
    assert equilibrium_density(2.0, -1.0) == 0.0
    t = np.linspace(-0.999, 0.999, 57)
    np.testing.assert_allclose(equilibrium_density(2.0, t), 2 / math.pi * np.sqrt(1 - t**2), atol=1e-10)


def test_density_outside_support():
    with pytest.raises(DomainError):
        equilibrium_density(2.0, 1.01)


@pytest.mark.parametrize("alpha", ALPHAS)
def test_measure_invariants(alpha):
    eq = equilibrium_measure(alpha)
    c = eq.support_radius
    assert c == FreudWeight(alpha).support_radius_c
    assert eq.integrate(np.ones_like) == pytest.approx(1.0, abs=1e-8)
    t = np.linspace(0, c, 41)
    np.testing.assert_allclose(eq.density(t), eq.density(-t), atol=1e-10)
    assert eq.density(c) == 0.0 and eq.density(0.9999999 * c) < 1e-2
    assert eq.normalization == pytest.approx(alpha / (math.pi * c), rel=1e-10)
    assert variational_deviation(eq) <= 1e-4
    assert eq.quadrature_grid.shape == (eq.quad_nodes.size, 2)


@pytest.mark.parametrize("alpha", ALPHAS)
def test_constants_match_mixture_oracle(alpha):
    eq = equilibrium_measure(alpha)
    assert eq.robin_constant == pytest.approx(mixture_robin(alpha), abs=1e-9)
    assert eq.energy - eq.robin_constant == pytest.approx(1 / (2 * alpha), abs=1e-9)


@pytest.mark.parametrize("alpha", [1.5, 2.0, 4.0])
@pytest.mark.parametrize("frac", [-0.9, -0.3, 0.0, 0.5, 0.99])
def test_cdf_matches_mixture_oracle(alpha, frac):
    eq = equilibrium_measure(alpha)
    t = frac * eq.support_radius
    assert eq.cdf(t) == pytest.approx(mixture_cdf(alpha, t), abs=1e-9)


def test_robin_and_energy_alpha2():
    assert robin_constant(2.0) == pytest.approx(math.log(2) + 0.5, abs=1e-6)
    assert energy(2.0) == pytest.approx(0.75 + math.log(2), abs=1e-6)
    assert math.exp(-energy(2.0)) == pytest.approx(0.23618, abs=1e-5)
    assert math.exp(-robin_constant(2.0)) == pytest.approx(0.30327, abs=1e-5)
    eq = equilibrium_measure(2.0)
    assert eq.potential(0.5) + 0.25 == pytest.approx(eq.robin_constant, abs=1e-4)


def test_robin_alpha4_dual_quadrature():
    assert robin_constant(4.0) == pytest.approx(ROBIN_ALPHA4, abs=1e-6)
    assert robin_constant(4.0) == pytest.approx(mixture_robin(4.0), abs=1e-9)


def test_density_profile_edges():
    assert density_profile(2.0, np.array([0.0]))[0] == pytest.approx(1.0)
    assert density_profile(3.0, np.array([1.0, 1.5])).tolist() == [0.0, 0.0]
    u = 0.4
    ref = integrate.quad(lambda s: s / math.sqrt(s * s - u * u), u, 1)[0]
    assert density_profile(2.0, np.array([u]))[0] == pytest.approx(ref, rel=1e-12)


def test_log_potential_examples():
    assert log_potential(DiscreteMeasure(np.array([0.0]), np.array([1.0])), 2.0) == pytest.approx(-math.log(2))
    assert log_potential(DiscreteMeasure(np.array([-1.0, 1.0]), np.array([0.5, 0.5])), 0.0) == 0.0
    assert log_potential(equilibrium_measure(2.0), 0.0) == pytest.approx(math.log(2) + 0.5, abs=1e-8)


def test_log_potential_outside_support():
    # off the support the integrand is smooth, so plain quad is a fair oracle
    x = 1.7
    ref = -integrate.quad(lambda t: 2 / math.pi * math.sqrt(1 - t * t) * math.log(x - t), -1, 1)[0]
    assert log_potential(equilibrium_measure(2.0), x) == pytest.approx(ref, abs=1e-9)


def test_log_potential_errors():
    with pytest.raises(DomainError):
        log_potential(DiscreteMeasure(np.array([0.0]), np.array([1.0])), 0.0)
    with pytest.raises(DomainError):
        log_potential(equilibrium_measure(2.0), math.inf)
    with pytest.raises(TypeError):
        log_potential(object(), 0.0)
