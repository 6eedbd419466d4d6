"""Finite-n diagnostics for contracted Leja nodes: numerator and denominator
roots, the near/far product split, the Fekete functional and CDF distance."""

from __future__ import annotations

import numpy as np

from ..errors import DomainError
from ..leja import ContractedNodeSet, DiscreteMeasure, empirical_measure, maximize_log_objective
from ..weights import FreudWeight, log_weight
from .equilibrium import EquilibriumMeasure, log_potential

DEFAULT_DELTAS = (0.5, 0.25, 0.1, 0.05)


def _check_k(nodes: ContractedNodeSet, k: int):
    if not 0 <= k <= nodes.n:
        raise IndexError(f"k={k} outside 0..{nodes.n}")


def numerator_limit(nodes: ContractedNodeSet, fw: FreudWeight, k: int, probes: int = 32) -> float:
    """(sup_{|y| <= c} w(y)^n prod_{j != k} |y - x_{n,j}|)^(1/n)."""
    _check_k(nodes, k)
    n = nodes.n
    c = fw.support_radius_c
    roots = np.delete(np.asarray(nodes.nodes, dtype=float), k)
    _, fs = maximize_log_objective(fw, roots, -c, c, field_power=n, probes=probes, xtol=1e-13 * c)
    return float(np.exp(np.max(fs) / n))


def _log_denominator(nodes, fw, k):
    x = np.asarray(nodes.nodes, dtype=float)
    d = np.abs(np.delete(x, k) - x[k])
    return nodes.n * float(log_weight(fw, x[k])), d


def denominator_value(nodes: ContractedNodeSet, fw: FreudWeight, k: int) -> float:
    """(w(x_{n,k})^n prod_{j != k} |x_{n,k} - x_{n,j}|)^(1/n)."""
    _check_k(nodes, k)
    lw, d = _log_denominator(nodes, fw, k)
    return float(np.exp((lw + np.sum(np.log(d))) / nodes.n))


def split_products(nodes: ContractedNodeSet, fw: FreudWeight, k: int, delta: float):
    """n-th roots of the far part A1 (weight included) and near part A2 of the
    denominator, split at distance ``delta`` from x_{n,k}. Empty products are 1."""
    if not delta > 0:
        raise ValueError("delta must be positive")
    _check_k(nodes, k)
    lw, d = _log_denominator(nodes, fw, k)
    far = d >= delta
    a1 = np.exp((lw + np.sum(np.log(d[far]))) / nodes.n)
    a2 = np.exp(np.sum(np.log(d[~far])) / nodes.n)
    return float(a1), float(a2)


def fekete_functional(points, fw: FreudWeight | None) -> float:
    """Geometric mean of |t - s| w(t) w(s) over ordered pairs t != s.

    For N points this is (prod_{t != s} |t - s| w(t) w(s))^(1/(N(N-1))), the
    normalisation under which weighted Fekete and asymptotically Fekete arrays
    converge to exp(-V_w).
    """
    x = np.asarray(points, dtype=float)
    m = x.size
    if m < 2:
        raise ValueError("need at least two points")
    diff = np.abs(x[:, None] - x[None, :])
    iu = np.triu_indices(m, 1)
    pair = diff[iu]
    if np.any(pair == 0):
        raise ValueError("points must be distinct")
    # each unordered pair appears twice, each point in 2(m-1) factors
    log_sum = 2.0 * np.sum(np.log(pair)) + 2.0 * (m - 1) * np.sum(log_weight(fw, x))
    return float(np.exp(log_sum / (m * (m - 1))))


def cdf_distance(empirical: DiscreteMeasure, eq: EquilibriumMeasure, grid: int = 2001) -> float:
    """sup_t |F_emp(t) - F_eq(t)| over both one-sided limits at every atom and a uniform grid on [-c, c]."""
    atoms = np.asarray(empirical.atoms, dtype=float)
    order = np.argsort(atoms)
    atoms = atoms[order]
    masses = np.asarray(empirical.masses, dtype=float)[order]
    cum = np.cumsum(masses)
    c = eq.support_radius
    ts = np.linspace(-c, c, grid)
    f_grid = eq.cdf(ts)
    emp_grid = np.concatenate(([0.0], cum))[np.searchsorted(atoms, ts, side="right")]
    f_atoms = eq.cdf(atoms)
    left = cum - masses
    dist = max(
        np.max(np.abs(emp_grid - f_grid)),
        np.max(np.abs(cum - f_atoms)),
        np.max(np.abs(left - f_atoms)),
    )
    return float(dist)


def discrete_log_polynomial_identity_check(nodes: ContractedNodeSet, fw: FreudWeight, k: int, x: float) -> float:
    """|log|P_{n,k}(x) w(x)^n|^(1/n) - (-U^{mu_{n,k}}(x) - Q(x))|.

    The left side is formed from the raw product, the right side from the
    discrete potential, so the difference exercises both code paths.
    """
    _check_k(nodes, k)
    n = nodes.n
    roots = np.delete(np.asarray(nodes.nodes, dtype=float), k)
    if np.any(roots == x):
        raise DomainError(f"x={x!r} is an atom of mu_(n,k)")
    p = np.prod(x - roots)
    lhs = (np.log(abs(p)) + np.log(fw.w(x) ** n)) / n
    rhs = -log_potential(empirical_measure(nodes, k), x) - fw.Q(x)
    return float(abs(lhs - rhs))
