"""Weighted Lagrange interpolation, Lebesgue function and Lebesgue constant."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.special import logsumexp

from ._search import golden_section_max
from .errors import ConfigurationError, DomainError, NumericalError
from .leja import DEFAULT_MARGIN, LejaSequence, generate_sequence
from .weights import FreudWeight, log_weight, mrs_number

NODE_SNAP = 1e-14
DEFAULT_LEBESGUE_PROBES = 64


@dataclass(frozen=True)
class BasisPrecompute:
    """Log-domain data for the Lagrange basis on ``nodes``.

    log_denominators[k] = log prod_{j != k} |x_k - x_j|, with the sign of the
    product in denominator_signs[k]; log_node_weights[k] = log w(x_k).
    """

    nodes: np.ndarray
    log_denominators: np.ndarray
    denominator_signs: np.ndarray
    log_node_weights: np.ndarray
    weight: FreudWeight | None = None


def precompute_basis(nodes, fw: FreudWeight | None = None) -> BasisPrecompute:
    x = np.asarray(nodes, dtype=float)
    if x.ndim != 1 or x.size == 0:
        raise ValueError("nodes must be a nonempty 1-d array")
    diff = x[:, None] - x[None, :]
    np.fill_diagonal(diff, 1.0)
    if np.any(diff == 0):
        raise DomainError("nodes must be distinct")
    logden = np.log(np.abs(diff)).sum(axis=1)
    signs = np.prod(np.sign(diff), axis=1)
    return BasisPrecompute(x, logden, signs, log_weight(fw, x), fw)


def _near_node(pre, x):
    d = np.abs(np.asarray(x, dtype=float)[..., None] - pre.nodes)
    return d.min(axis=-1) <= NODE_SNAP


def lebesgue_function(pre: BasisPrecompute, fw: FreudWeight | None, x):
    """sum_k w(x) |l_k(x)| / w(x_k), accumulated with log-sum-exp.

    Probes within 1e-14 of a node get the limiting value 1.
    """
    x = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(x)):
        raise DomainError("x must be finite")
    with np.errstate(divide="ignore", invalid="ignore"):
        logdist = np.log(np.abs(x[..., None] - pre.nodes))
        total = logdist.sum(axis=-1, keepdims=True)
        terms = total - logdist - pre.log_denominators - pre.log_node_weights
        out = np.exp(logsumexp(terms, axis=-1) + log_weight(fw, x))
    out = np.where(_near_node(pre, x), 1.0, out)
    return float(out) if out.ndim == 0 else out


@dataclass(frozen=True)
class LebesgueReport:
    n: int
    constant: float
    argmax_location: float
    nth_root: float
    grid_size: int
    guard_max: float = float("nan")


def _sup_lebesgue(pre, fw, lo, hi, probes, xtol):
    if hi <= lo:
        v = lebesgue_function(pre, fw, np.array([lo]))
        return float(lo), float(v[0]), 1
    inner = np.sort(pre.nodes[(pre.nodes > lo) & (pre.nodes < hi)])
    breaks = np.concatenate(([lo], inner, [hi]))
    s = np.linspace(0.0, 1.0, probes)
    left, right = breaks[:-1], breaks[1:]
    grid = left[:, None] + (right - left)[:, None] * s
    vals = lebesgue_function(pre, fw, grid)
    idx = np.argmax(vals, axis=1)
    rows = np.arange(len(left))
    a = grid[rows, np.maximum(idx - 1, 0)]
    b = grid[rows, np.minimum(idx + 1, probes - 1)]
    gx, gf = golden_section_max(lambda t: lebesgue_function(pre, fw, t), a, b, xtol)
    cand_x = np.concatenate((grid[rows, idx], gx))
    cand_f = np.concatenate((vals[rows, idx], gf))
    i = int(np.argmax(cand_f))
    return float(cand_x[i]), float(cand_f[i]), grid.size


def lebesgue_constant(
    seq: LejaSequence,
    fw: FreudWeight | None,
    n: int,
    probes: int = DEFAULT_LEBESGUE_PROBES,
    xtol: float = 1e-12,
    margin: float = DEFAULT_MARGIN,
    check_guard: bool = True,
) -> LebesgueReport:
    """Weighted Lebesgue constant of the first n+1 sequence points.

    The supremum is taken over [-a_n, a_n] (or the sequence domain when
    unweighted). The guard bands a_n < |x| <= a_n(1+margin) are scanned too;
    a value there at or above the interior supremum raises NumericalError.
    """
    if probes < 4:
        raise ConfigurationError("grid too coarse: need at least 4 probes per interval")
    if n < 0 or n > seq.n:
        raise ValueError(f"n={n} outside 0..{seq.n}")
    pre = precompute_basis(seq.points[: n + 1], fw)
    if fw is None:
        lo, hi = seq.domain if seq.domain is not None else (-1.0, 1.0)
    else:
        a_n = mrs_number(fw, n) if n >= 1 else 0.0
        lo, hi = -a_n, a_n
    x, val, size = _sup_lebesgue(pre, fw, lo, hi, probes, xtol)

    guard = float("nan")
    if fw is not None and check_guard and n >= 1:
        outer = hi * (1.0 + margin)
        gl = _sup_lebesgue(pre, fw, -outer, lo, probes, xtol)
        gr = _sup_lebesgue(pre, fw, hi, outer, probes, xtol)
        guard = max(gl[1], gr[1])
        if guard > val:
            raise NumericalError(
                f"Lebesgue function in the guard band ({guard:.6g}) exceeds the sup over [-a_n, a_n] "
                f"({val:.6g}) at n={n}"
            )
        size += 2 * size
    nth = val ** (1.0 / n) if n >= 1 else val
    return LebesgueReport(n, val, x, nth, size, guard)


def interpolate(pre: BasisPrecompute, fvalues, x):
    """Lagrange interpolant sum_k f(x_k) l_k(x) in the first barycentric form.

    Each term carries (sign, log magnitude) of prod_{j != k} (x - x_j) / (x_k - x_j),
    so no raw product is ever formed. The second (ratio) form is avoided: its
    rounding error scales with the unweighted Lebesgue constant, which for
    weighted Leja nodes grows like exp(a_n^alpha). At a node the stored value
    is returned exactly.
    """
    f = np.asarray(fvalues, dtype=float)
    if f.shape != pre.nodes.shape:
        raise ValueError(f"expected {pre.nodes.size} function values, got {f.size}")
    x = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(x)):
        raise DomainError("x must be finite")
    exact = x[..., None] == pre.nodes
    out = _first_form(pre, f, x)
    hit = exact.any(axis=-1)
    if np.any(hit):
        out = np.where(hit, f[np.argmax(exact, axis=-1)], out)
    return float(out) if out.ndim == 0 else out


def _first_form(pre, f, x):
    d = x[..., None] - pre.nodes
    with np.errstate(divide="ignore", invalid="ignore"):
        logd = np.log(np.abs(d))
        log_l = logd.sum(axis=-1, keepdims=True)
        sign_l = np.prod(np.sign(d), axis=-1, keepdims=True)
        terms = np.exp(log_l - logd - pre.log_denominators) * sign_l * np.sign(d) * pre.denominator_signs
    return np.nan_to_num(terms * f).sum(axis=-1)


def lagrange_basis_direct(nodes, x):
    """Plain product-form l_k(x), shape (..., n+1). Only sensible for small n."""
    nodes = np.asarray(nodes, dtype=float)
    x = np.asarray(x, dtype=float)
    out = np.ones(x.shape + nodes.shape)
    for k in range(nodes.size):
        for j in range(nodes.size):
            if j != k:
                out[..., k] *= (x - nodes[j]) / (nodes[k] - nodes[j])
    return out


def interpolation_error_study(fw: FreudWeight, f, n_list, grid: int = 20001, seq: LejaSequence | None = None,
                              margin: float = DEFAULT_MARGIN):
    """Weighted sup error sup_x w(x)|f(x) - I_n[f](x)| on [-a_n(1+margin), a_n(1+margin)].

    Returns a list of (n, error). The trend over n is reported, not enforced.
    """
    n_list = [int(n) for n in n_list]
    if seq is None:
        seq = generate_sequence(fw, max(n_list))
    rows = []
    for n in n_list:
        nodes = seq.points[: n + 1]
        pre = precompute_basis(nodes, fw)
        bound = mrs_number(fw, n) * (1.0 + margin)
        xs = np.linspace(-bound, bound, grid)
        err = np.exp(log_weight(fw, xs)) * np.abs(f(xs) - interpolate(pre, f(nodes), xs))
        rows.append((n, float(np.max(err))))
    return rows
