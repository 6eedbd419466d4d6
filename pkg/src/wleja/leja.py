"""Standard and weighted Leja sequences, contraction and empirical measures."""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from ._search import maximize_on_intervals
from .errors import BoundaryMaximizerError, DomainError
from .weights import FreudWeight, contraction_factor, log_weight, mrs_number

log = logging.getLogger(__name__)

DEFAULT_MARGIN = 0.05
DEFAULT_PROBES = 32
TIE_RTOL = 1e-12


@dataclass(frozen=True)
class SolverSettings:
    margin: float = DEFAULT_MARGIN
    probes: int = DEFAULT_PROBES
    rel_xtol: float = 1e-13

    def __post_init__(self):
        if not 0 < self.margin <= 0.5:
            raise DomainError("margin must lie in (0, 0.5]")
        if self.probes < 4:
            raise DomainError("need at least 4 probes per sub-interval")


@dataclass(frozen=True)
class LejaSequence:
    """Leja abscissas in generation order.

    ``weight`` is None for the unweighted baseline, in which case ``domain``
    holds the closed interval searched. ``objective_values[k]`` is the
    log-objective attained when ``points[k]`` was chosen (NaN for the seed).
    """

    weight: FreudWeight | None
    x0: float
    points: np.ndarray
    objective_values: np.ndarray
    settings: SolverSettings = SolverSettings()
    domain: tuple[float, float] | None = None

    def __post_init__(self):
        self.points.setflags(write=False)
        self.objective_values.setflags(write=False)

    def __len__(self):
        return len(self.points)

    @property
    def n(self) -> int:
        return len(self.points) - 1

    @property
    def alpha(self) -> float | None:
        return None if self.weight is None else self.weight.alpha


@dataclass(frozen=True)
class ContractedNodeSet:
    n: int
    nodes: np.ndarray
    alpha: float


@dataclass(frozen=True)
class DiscreteMeasure:
    atoms: np.ndarray
    masses: np.ndarray

    def __post_init__(self):
        if len(self.atoms) != len(self.masses):
            raise ValueError("atoms and masses differ in length")
        if np.any(np.asarray(self.masses) < 0):
            raise ValueError("masses must be non-negative")


def log_objective(fw: FreudWeight | None, roots, x, field_power: float = 1.0):
    """log w(x)^p + sum_j log|x - roots_j|, broadcast over any array ``x``."""
    x = np.asarray(x, dtype=float)
    roots = np.asarray(roots, dtype=float)
    with np.errstate(divide="ignore"):
        s = np.log(np.abs(x[..., None] - roots)).sum(axis=-1)
    return s + field_power * log_weight(fw, x)


def log_objective_derivative(fw: FreudWeight | None, roots, x, field_power: float = 1.0):
    x = np.asarray(x, dtype=float)
    roots = np.asarray(roots, dtype=float)
    with np.errstate(divide="ignore"):
        d = (1.0 / (x[..., None] - roots)).sum(axis=-1)
    if fw is not None:
        d = d - field_power * fw.dQ(x)
    return d


def maximize_log_objective(fw, roots, lo, hi, *, field_power=1.0, probes=DEFAULT_PROBES, xtol=1e-13):
    """Maximise the weighted log-product over [lo, hi].

    The interval is cut at every root inside it; on each piece the objective is
    concave, so probe + golden-section + derivative polish finds the piece
    maximum. Returns (per-piece argmax, per-piece max) sorted by position.
    """
    roots = np.asarray(roots, dtype=float)
    inner = np.sort(roots[(roots > lo) & (roots < hi)])
    breaks = np.concatenate(([lo], inner, [hi]))
    breaks = breaks[np.concatenate(([True], np.diff(breaks) > 0))]

    def f(x):
        return log_objective(fw, roots, x, field_power)

    def df(x):
        return log_objective_derivative(fw, roots, x, field_power)

    return maximize_on_intervals(f, breaks, probes=probes, xtol=xtol, df=df)


def _pick(xs, fs):
    best = np.max(fs)
    tol = TIE_RTOL * max(1.0, abs(best))
    tied = fs >= best - tol
    i = np.flatnonzero(tied)[np.argmax(xs[tied])]
    return float(xs[i]), float(fs[i])


def next_leja_point(fw: FreudWeight, current, settings: SolverSettings = SolverSettings()):
    """Global maximiser of log w(x) + sum_j log|x - x_j| for the weighted recursion.

    The search runs over [-a_n(1+margin), a_n(1+margin)], n = len(current).
    Near-ties (relative gap <= 1e-12) go to the largest coordinate. A maximiser
    on the search boundary raises BoundaryMaximizerError.
    """
    x, f = _next_weighted(fw, current, settings)
    return x


def _next_weighted(fw, current, settings):
    current = np.asarray(current, dtype=float)
    if current.size == 0:
        raise ValueError("current must be nonempty")
    n = current.size
    bound = mrs_number(fw, n) * (1.0 + settings.margin)
    xs, fs = maximize_log_objective(
        fw, current, -bound, bound, probes=settings.probes, xtol=settings.rel_xtol * mrs_number(fw, n)
    )
    x, f = _pick(xs, fs)
    if abs(abs(x) - bound) <= 1e-9 * bound:
        raise BoundaryMaximizerError(
            f"maximiser {x:.17g} hit the search boundary +-{bound:.6g}; margin {settings.margin} is insufficient",
            step=n,
        )
    return x, f


def _next_unweighted(current, domain, settings):
    lo, hi = domain
    xs, fs = maximize_log_objective(
        None, current, lo, hi, probes=settings.probes, xtol=settings.rel_xtol * max(1.0, hi - lo)
    )
    return _pick(xs, fs)


def generate_sequence(fw: FreudWeight, n: int, x0: float = 0.0, settings: SolverSettings = SolverSettings()):
    """Weighted Leja sequence x_0..x_n for the Freud weight ``fw``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if not np.isfinite(x0):
        raise DomainError("x0 must be finite")
    pts = [float(x0)]
    objs = [np.nan]
    for k in range(1, n + 1):
        try:
            x, f = _next_weighted(fw, pts, settings)
        except BoundaryMaximizerError as exc:
            raise BoundaryMaximizerError(f"step {k}: {exc}", step=k) from exc
        pts.append(x)
        objs.append(f)
    log.debug("generated %d weighted Leja points (alpha=%g)", n + 1, fw.alpha)
    return LejaSequence(fw, float(x0), np.array(pts), np.array(objs), settings)


def generate_unweighted(n: int, x0: float = 1.0, domain=(-1.0, 1.0), settings: SolverSettings = SolverSettings()):
    """Classical Leja sequence on a closed interval (w = 1)."""
    lo, hi = map(float, domain)
    if not lo < hi:
        raise DomainError("domain must be a nondegenerate interval")
    if not lo <= x0 <= hi:
        raise DomainError("x0 must lie in the domain")
    pts = [float(x0)]
    objs = [np.nan]
    for _ in range(n):
        x, f = _next_unweighted(pts, (lo, hi), settings)
        pts.append(x)
        objs.append(f)
    return LejaSequence(None, float(x0), np.array(pts), np.array(objs), settings, domain=(lo, hi))


def contract(seq: LejaSequence, n: int) -> ContractedNodeSet:
    """Nodes x_{n,j} = n^(-1/alpha) x_j for j = 0..n."""
    if seq.weight is None:
        raise ValueError("contraction needs a Freud weight")
    if n < 1 or n > seq.n:
        raise ValueError(f"n={n} outside 1..{seq.n}")
    return ContractedNodeSet(n, contraction_factor(seq.weight, n) * np.array(seq.points[: n + 1]), seq.weight.alpha)


def empirical_measure(nodes: ContractedNodeSet, excluded_index: int | None = None) -> DiscreteMeasure:
    """mu_n (mass 1/(n+1) everywhere) or, with ``excluded_index=k``, mu_{n,k} (mass 1/n off x_{n,k})."""
    x = np.asarray(nodes.nodes, dtype=float)
    if excluded_index is None:
        return DiscreteMeasure(x.copy(), np.full(x.size, 1.0 / x.size))
    k = int(excluded_index)
    if not 0 <= k < x.size:
        raise IndexError(f"excluded_index {excluded_index} outside 0..{x.size - 1}")
    atoms = np.delete(x, k)
    return DiscreteMeasure(atoms, np.full(atoms.size, 1.0 / atoms.size))
