"""Equilibrium measure of the field |x|^alpha, logarithmic potentials, Robin constant and energy."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .._quad import gauss_legendre01, graded_rule
from ..errors import DomainError, NumericalError
from ..leja import DiscreteMeasure
from ..weights import FreudWeight

DENSITY_ORDER = 128
VARIATIONAL_TOL = 1e-4


def density_profile(alpha: float, u):
    """int_{|u|}^{1} s^(alpha-1) / sqrt(s^2 - u^2) ds, vectorised over ``u``.

    With s = |u| cosh(v) the inverse square root disappears and the integrand
    becomes (|u| cosh v)^(alpha-1) on [0, arccosh(1/|u|)].
    """
    u = np.abs(np.asarray(u, dtype=float))
    out = np.zeros_like(u)
    zero = u == 0
    out[zero] = 1.0 / (alpha - 1.0)
    inner = (u > 0) & (u < 1)
    if np.any(inner):
        ui = np.maximum(u[inner], 1e-30)
        length = np.arccosh(1.0 / ui)
        x, w = gauss_legendre01(DENSITY_ORDER)
        v = length[:, None] * x
        vals = (ui[:, None] * np.cosh(v)) ** (alpha - 1.0)
        out[inner] = length * (vals @ w)
    return out


@dataclass(frozen=True, eq=False)
class EquilibriumMeasure:
    """Equilibrium measure mu_w for w = exp(-|x|^alpha), supported on [-c, c].

    The density is N * density_profile(alpha, t/c) with N fixed numerically by
    unit total mass. ``quad_nodes``/``quad_weights`` integrate against mu_w
    (the density is folded into the weights).
    """

    alpha: float
    support_radius: float
    normalization: float
    quad_nodes: np.ndarray
    quad_weights: np.ndarray
    robin_constant: float = float("nan")
    energy: float = float("nan")

    @property
    def quadrature_grid(self):
        return np.column_stack((self.quad_nodes, self.quad_weights))

    def density(self, t):
        t = np.asarray(t, dtype=float)
        out = self.normalization * density_profile(self.alpha, t / self.support_radius)
        return float(out) if out.ndim == 0 else out

    def integrate(self, g) -> float:
        """int g dmu_w for a vectorised callable ``g``."""
        return float(np.dot(self.quad_weights, g(self.quad_nodes)))

    def potential(self, x) -> float:
        return _continuous_potential(self, float(x))

    def cdf(self, t):
        t = np.asarray(t, dtype=float)
        out = _cdf_sorted(self, t.ravel()).reshape(t.shape)
        return float(out) if out.ndim == 0 else out


def _density_rule(c, breaks, levels=14):
    nodes, weights = [], []
    for p, q in zip(breaks[:-1], breaks[1:]):
        if q > p:
            x, w = graded_rule(p, q, levels=levels)
            nodes.append(x)
            weights.append(w)
    return np.concatenate(nodes), np.concatenate(weights)


def _continuous_potential(eq: EquilibriumMeasure, x: float) -> float:
    # split at x (log singularity), 0 (density kink) and +-c (square-root edge);
    # each piece is graded toward both of its ends
    c = eq.support_radius
    pts = {-c, 0.0, c}
    if -c < x < c:
        pts.add(x)
    breaks = np.array(sorted(pts))
    t, w = _density_rule(c, breaks)
    with np.errstate(divide="ignore"):
        logs = np.log(np.abs(x - t))
    return float(-np.dot(w * eq.density(t), logs))


def _cdf_sorted(eq: EquilibriumMeasure, t: np.ndarray) -> np.ndarray:
    c = eq.support_radius
    out = np.empty_like(t)
    out[t <= -c] = 0.0
    out[t >= c] = 1.0
    inside = (t > -c) & (t < c)
    if not np.any(inside):
        return out
    ti = t[inside]
    order = np.argsort(ti)
    pts = np.unique(np.concatenate(([-c, 0.0, c], ti)))
    special = {-c, 0.0, c}
    lo, hi = pts[:-1], pts[1:]
    masses = np.empty(lo.size)
    x16, w16 = gauss_legendre01(16)
    for i, (p, q) in enumerate(zip(lo, hi)):
        if p in special or q in special:
            x, w = graded_rule(p, q, left=p in special, right=q in special, levels=12)
        else:
            x, w = p + (q - p) * x16, (q - p) * w16
        masses[i] = np.dot(w, eq.density(x))
    cum = np.concatenate(([0.0], np.cumsum(masses)))
    cum /= cum[-1]
    vals = np.interp(ti[order], pts, cum)
    res = np.empty_like(ti)
    res[order] = vals
    out[inside] = res
    return out


@lru_cache(maxsize=None)
def equilibrium_measure(alpha: float, check: bool = True) -> EquilibriumMeasure:
    """Build (and cache) mu_w for the given exponent.

    With ``check`` the variational identity U + Q = F_w is verified on
    [-0.95c, 0.95c]; failure raises NumericalError.
    """
    fw = FreudWeight(alpha)
    alpha = fw.alpha
    c = fw.support_radius_c
    t, w = _density_rule(c, np.array([-c, 0.0, c]))
    raw = density_profile(alpha, t / c)
    mass = float(np.dot(w, raw))
    norm = 1.0 / mass
    eq = EquilibriumMeasure(alpha, c, norm, t, w * raw * norm)
    robin = _continuous_potential(eq, 0.0)
    energy = robin + eq.integrate(lambda s: np.abs(s) ** alpha)
    eq = EquilibriumMeasure(alpha, c, norm, t, w * raw * norm, robin, energy)
    if check:
        dev = variational_deviation(eq)
        if dev > VARIATIONAL_TOL:
            raise NumericalError(f"variational identity violated by {dev:.3g} for alpha={alpha}")
    return eq


def variational_deviation(eq: EquilibriumMeasure, fraction: float = 0.95, points: int = 41) -> float:
    """sup |U(t) + Q(t) - F_w| over a uniform grid on [-fraction c, fraction c]."""
    ts = np.linspace(-fraction * eq.support_radius, fraction * eq.support_radius, points)
    return max(abs(_continuous_potential(eq, t) + abs(t) ** eq.alpha - eq.robin_constant) for t in ts)


def equilibrium_density(alpha: float, t):
    eq = equilibrium_measure(float(alpha))
    t_arr = np.asarray(t, dtype=float)
    if np.any(np.abs(t_arr) > eq.support_radius):
        raise DomainError(f"|t| exceeds the support radius {eq.support_radius:.6g}")
    return eq.density(t_arr)


def log_potential(measure, x) -> float:
    """U(x) = int log(1/|x - t|) dmu(t) for an equilibrium or discrete measure."""
    x = float(x)
    if not np.isfinite(x):
        raise DomainError("x must be finite")
    if isinstance(measure, EquilibriumMeasure):
        return _continuous_potential(measure, x)
    if isinstance(measure, DiscreteMeasure):
        d = np.abs(x - np.asarray(measure.atoms, dtype=float))
        if np.any(d == 0):
            raise DomainError(f"x={x!r} coincides with an atom")
        return float(-np.dot(measure.masses, np.log(d)))
    raise TypeError(f"unsupported measure type {type(measure).__name__}")


def robin_constant(alpha: float) -> float:
    """F_w = U(0) + Q(0) = U(0)."""
    return equilibrium_measure(float(alpha)).robin_constant


def energy(alpha: float) -> float:
    """V_w = F_w + int Q dmu_w."""
    return equilibrium_measure(float(alpha)).energy
