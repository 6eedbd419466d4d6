import math

import numpy as np
import pytest

from wleja.errors import BoundaryMaximizerError, DomainError
from wleja.leja import (
    SolverSettings,
    contract,
    empirical_measure,
    generate_sequence,
    generate_unweighted,
    log_objective,
    next_leja_point,
)
from wleja.weights import FreudWeight, mrs_number

# root of 1/t + 1/(t - 2^-1/2) - 2t on t < 0, checked against a 10^7 point grid
X2_ALPHA2 = -0.8817477337899347


def test_second_point_alpha2(fw2):
    assert next_leja_point(fw2, [0.0]) == pytest.approx(2**-0.5, abs=1e-12)


def test_generate_n1(fw2):
    seq = generate_sequence(fw2, 1)
    np.testing.assert_allclose(seq.points, [0.0, 2**-0.5], atol=1e-12)
    assert seq.n == 1 and len(seq) == 2


def test_third_point_alpha2(fw2):
    seq = generate_sequence(fw2, 2)
    assert seq.points[2] < 0
    assert seq.points[2] == pytest.approx(X2_ALPHA2, abs=1e-10)
    t = seq.points[2]
    assert 1 / t + 1 / (t - 2**-0.5) - 2 * t == pytest.approx(0.0, abs=1e-8)


def test_unweighted_examples():
    seq = generate_unweighted(3, 1.0)
    assert seq.points[1] == pytest.approx(-1.0, abs=1e-9)
    assert seq.points[2] == pytest.approx(0.0, abs=1e-9)
    assert seq.points[3] == pytest.approx(3**-0.5, abs=1e-9)
    assert generate_unweighted(1, 0.0).points[1] == pytest.approx(1.0, abs=1e-12)
    assert seq.weight is None and seq.alpha is None


def test_unweighted_domain_checks():
    with pytest.raises(DomainError):
        generate_unweighted(2, 2.0)
    with pytest.raises(DomainError):
        generate_unweighted(2, 0.0, domain=(1.0, 1.0))


def test_sequence_invariants(seq200, fw2):
    pts = np.asarray(seq200.points)
    assert pts[0] == seq200.x0 == 0.0
    assert len(np.unique(pts)) == pts.size
    for k in range(1, seq200.n + 1):
        assert abs(pts[k]) <= mrs_number(fw2, k) * (1 + seq200.settings.margin)
    with pytest.raises(ValueError):
        seq200.points[0] = 1.0


@pytest.mark.parametrize("k", [1, 2, 3, 7, 20, 64, 150, 200])
def test_greedy_optimality(seq200, fw2, k):
    prev = seq200.points[:k]
    bound = mrs_number(fw2, k) * 1.05
    y = np.linspace(-bound, bound, 200001)
    with np.errstate(divide="ignore"):
        grid_max = np.max(log_objective(fw2, prev, y))
    attained = log_objective(fw2, prev, seq200.points[k])
    assert attained >= grid_max - 1e-9
    assert attained == pytest.approx(seq200.objective_values[k], abs=1e-9)


@pytest.mark.parametrize("k", [1, 5, 50, 200])
def test_restricted_range(seq200, fw2, k):
    prev = seq200.points[:k]
    edge = mrs_number(fw2, k) * 1.05
    assert np.all(log_objective(fw2, prev, np.array([-edge, edge])) < seq200.objective_values[k])


def test_determinism(fw2):
    a = generate_sequence(fw2, 40)
    b = generate_sequence(fw2, 40)
    assert a.points.tobytes() == b.points.tobytes()


def test_boundary_error_reports_step(monkeypatch):
    # shrinking a_n puts the true maximiser 2^-1/2 outside the search window
    import wleja.leja as leja

    monkeypatch.setattr(leja, "mrs_number", lambda fw, n: 0.5 * mrs_number(fw, n))
    with pytest.raises(BoundaryMaximizerError) as info:
        generate_sequence(FreudWeight(2.0), 3)
    assert info.value.step == 1
    assert "margin" in str(info.value)


def test_settings_validation():
    with pytest.raises(DomainError):
        SolverSettings(margin=0.0)
    with pytest.raises(DomainError):
        SolverSettings(probes=3)


def test_contract(fw2, seq200):
    assert np.array_equal(contract(generate_sequence(fw2, 1), 1).nodes, generate_sequence(fw2, 1).points)
    np.testing.assert_allclose(contract(seq200, 4).nodes, 0.5 * seq200.points[:5], rtol=1e-15)
    seq4 = generate_sequence(FreudWeight(4), 16)
    np.testing.assert_allclose(contract(seq4, 16).nodes, 0.5 * seq4.points, rtol=1e-15)
    with pytest.raises(ValueError):
        contract(seq200, 201)


@pytest.mark.parametrize("n", [10, 50, 200])
def test_contracted_nodes_bounded(seq200, fw2, n):
    assert np.max(np.abs(contract(seq200, n).nodes)) <= fw2.support_radius_c * 1.05


def test_empirical_measure(seq200):
    nodes = contract(seq200, 2)
    mu = empirical_measure(nodes)
    np.testing.assert_allclose(mu.masses, [1 / 3] * 3)
    mu1 = empirical_measure(nodes, 1)
    np.testing.assert_array_equal(mu1.atoms, nodes.nodes[[0, 2]])
    np.testing.assert_allclose(mu1.masses, [0.5, 0.5])
    single = empirical_measure(contract(seq200, 1), 0)
    assert single.atoms.tolist() == [seq200.points[1]] and single.masses.tolist() == [1.0]
    with pytest.raises(IndexError):
        empirical_measure(nodes, 3)


@pytest.mark.parametrize("n", [1, 20, 200])
def test_empirical_mass_sums_to_one(seq200, n):
    for k in (None, 0, n):
        assert math.isclose(empirical_measure(contract(seq200, n), k).masses.sum(), 1.0, rel_tol=1e-14)
