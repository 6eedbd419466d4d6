"""Node-separation statistics and the weighted Bernstein-inequality diagnostic."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .leja import ContractedNodeSet, LejaSequence, contract, log_objective, log_objective_derivative, maximize_log_objective
from .weights import FreudWeight, mrs_number, phi_n, phi_n_defined, phi_n_symmetric

DEFAULT_BERNSTEIN_GRID = 4001


@dataclass(frozen=True)
class SpacingReport:
    n: int
    min_scaled_gap: float
    new_point_gap: float
    bernstein_sup_ratio: float


def min_gap_statistic(nodes: ContractedNodeSet) -> float:
    """n * min_{i<j} |x_{n,i} - x_{n,j}|, bounded below uniformly in n for Leja nodes."""
    x = np.sort(np.asarray(nodes.nodes, dtype=float))
    return float(nodes.n * np.min(np.diff(x)))


def new_point_gap(seq: LejaSequence, n: int) -> float:
    """(n / a_n) * min_{j<n} |x_n - x_j| in uncontracted coordinates."""
    if n < 1 or n > seq.n:
        raise ValueError(f"n={n} outside 1..{seq.n}")
    pts = np.asarray(seq.points)
    return float(n / mrs_number(seq.weight, n) * np.min(np.abs(pts[n] - pts[:n])))


def _log_sup_norm(fw, roots, n, margin=0.05):
    bound = mrs_number(fw, n) * (1 + margin)
    _, fs = maximize_log_objective(fw, roots, -bound, bound, xtol=1e-13 * bound)
    return float(np.max(fs))


def bernstein_check(seq: LejaSequence, fw: FreudWeight, n: int, grid: int = DEFAULT_BERNSTEIN_GRID,
                    scale: str = "symmetric") -> float:
    """sup_t |(P_n w)'(t)| phi_n(t) / ||P_n w|| over a uniform grid on [-a_n, a_n],
    with P_n(t) = prod_{j<n} (t - x_j).

    The derivative comes from the logarithmic derivative,
    (P_n w)' = P_n w (sum_j 1/(t - x_j) - Q'(t)); grid points on a root are
    skipped. ``scale="symmetric"`` uses :func:`phi_n_symmetric`.
    ``scale="asymmetric"`` uses :func:`phi_n`, skipping points where its radicand
    is not positive. That form has a pole at t = -a_n(1 - zeta_n), so its sup
    mostly measures how close the grid gets to the pole.
    """
    if n < 1 or n > seq.n:
        raise ValueError(f"n={n} outside 1..{seq.n}")
    if scale not in ("symmetric", "asymmetric"):
        raise ValueError(f"unknown scale {scale!r}")
    roots = np.asarray(seq.points[:n], dtype=float)
    a_n = mrs_number(fw, n)
    t = np.linspace(-a_n, a_n, grid)
    t = t[~np.isin(t, roots)]
    if scale == "asymmetric":
        t = t[phi_n_defined(fw, n, t)]
        phi = phi_n(fw, n, t)
    else:
        phi = phi_n_symmetric(fw, n, t)
    log_norm = _log_sup_norm(fw, roots, n)
    ratio = weighted_poly_derivative(fw, roots, t, log_norm) * phi
    return float(np.max(np.abs(ratio)))


def weighted_poly_derivative(fw: FreudWeight, roots, t, log_scale: float = 0.0):
    """(P w)'(t) * exp(-log_scale) for P with the given roots, from the log-derivative."""
    t = np.asarray(t, dtype=float)
    roots = np.asarray(roots, dtype=float)
    sign = np.prod(np.sign(t[..., None] - roots), axis=-1)
    mag = np.exp(log_objective(fw, roots, t) - log_scale)
    return sign * mag * log_objective_derivative(fw, roots, t)


def weighted_poly(fw: FreudWeight, roots, t, log_scale: float = 0.0):
    t = np.asarray(t, dtype=float)
    roots = np.asarray(roots, dtype=float)
    sign = np.prod(np.sign(t[..., None] - roots), axis=-1)
    return sign * np.exp(log_objective(fw, roots, t) - log_scale)


def derivative_fd_discrepancy(seq: LejaSequence, fw: FreudWeight, n: int, probes: int = 10,
                              step: float = 1e-6, seed: int = 0) -> float:
    """Max relative gap between the analytic (P_n w)' and a central difference at random probes."""
    roots = np.asarray(seq.points[:n], dtype=float)
    a_n = mrs_number(fw, n)
    rng = np.random.default_rng(seed)
    t = rng.uniform(-a_n, a_n, probes)
    log_norm = _log_sup_norm(fw, roots, n)
    exact = weighted_poly_derivative(fw, roots, t, log_norm)
    fd = (weighted_poly(fw, roots, t + step, log_norm) - weighted_poly(fw, roots, t - step, log_norm)) / (2 * step)
    return float(np.max(np.abs(fd - exact) / np.abs(exact)))


def spacing_report(seq: LejaSequence, n: int, grid: int = DEFAULT_BERNSTEIN_GRID) -> SpacingReport:
    return SpacingReport(
        n,
        min_gap_statistic(contract(seq, n)),
        new_point_gap(seq, n),
        bernstein_check(seq, seq.weight, n, grid),
    )
