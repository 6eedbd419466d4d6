"""Freud weights w(x) = exp(-|x|^alpha) and the scalar quantities derived from them."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import brentq

from .errors import DomainError, NumericalError


def _mrs_constant(alpha: float) -> float:
    # a_n**alpha / n for Q(x) = |x|**alpha
    return math.sqrt(math.pi) * math.gamma(alpha / 2 + 1) / (alpha * math.gamma((alpha + 1) / 2))


@dataclass(frozen=True)
class FreudWeight:
    """The weight exp(-|x|^alpha) on the real line, alpha > 1.

    ``support_radius_c`` is n^(-1/alpha) a_n, which is the same for every n
    because the MRS number scales exactly like n^(1/alpha).
    """

    alpha: float
    support_radius_c: float = field(init=False)

    def __post_init__(self):
        alpha = float(self.alpha)
        if not math.isfinite(alpha) or alpha <= 1.0:
            raise DomainError(f"alpha must exceed 1, got {self.alpha!r}")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "support_radius_c", _mrs_constant(alpha) ** (1.0 / alpha))

    def Q(self, x):
        return external_field(self, x)

    def dQ(self, x):
        """Derivative of the external field, alpha |x|^(alpha-1) sign(x)."""
        x = np.asarray(x, dtype=float)
        return self.alpha * np.sign(x) * np.abs(x) ** (self.alpha - 1.0)

    def w(self, x):
        return weight_value(self, x)


def _check_finite(x):
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise DomainError("x must be finite")
    return arr


def _scalar_or_array(arr):
    return float(arr) if arr.ndim == 0 else arr


def external_field(fw: FreudWeight, x):
    """Q(x) = |x|^alpha. Accepts scalars or arrays."""
    arr = _check_finite(x)
    return _scalar_or_array(np.abs(arr) ** fw.alpha)


def weight_value(fw: FreudWeight, x):
    """w(x) = exp(-|x|^alpha)."""
    arr = _check_finite(x)
    return _scalar_or_array(np.exp(-(np.abs(arr) ** fw.alpha)))


def log_weight(fw: FreudWeight | None, x):
    """log w(x); the unweighted baseline (``fw is None``) gives zeros."""
    x = np.asarray(x, dtype=float)
    if fw is None:
        return np.zeros_like(x)
    return -(np.abs(x) ** fw.alpha)


def mrs_number(fw: FreudWeight, n: int) -> float:
    """MRS number a_n from the closed form.

    For Q = |x|^alpha the defining integral equation reduces to
    a_n = [n sqrt(pi) Gamma(alpha/2 + 1) / (alpha Gamma((alpha + 1)/2))]^(1/alpha).
    """
    if int(n) != n or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    return (n * _mrs_constant(fw.alpha)) ** (1.0 / fw.alpha)


def _sin_power_integral(alpha: float, tol: float) -> float:
    # int_0^{pi/2} sin(theta)^alpha dtheta by Gauss-Legendre, doubling the order
    def gl(m):
        t, wts = np.polynomial.legendre.leggauss(m)
        theta = (t + 1.0) * (math.pi / 4)
        return float(np.dot(wts, np.sin(theta) ** alpha) * (math.pi / 4))

    m = 64
    prev = gl(m)
    while m < 8192:
        m *= 2
        cur = gl(m)
        if abs(cur - prev) <= tol / 10 * abs(cur):
            return cur
        prev = cur
    return prev


def mrs_number_quadrature(fw: FreudWeight, n: int, tol: float = 1e-10) -> float:
    """Root of n - (1/pi) int_{-a}^{a} x Q'(x) / sqrt(a^2 - x^2) dx, found numerically.

    With x = a sin(theta) the integral becomes 2 alpha a^alpha int_0^{pi/2} sin^alpha,
    free of the endpoint singularity. Used to validate :func:`mrs_number`.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    alpha = fw.alpha
    integral = _sin_power_integral(alpha, tol)

    def residual(a):
        return n - (2.0 * alpha / math.pi) * a**alpha * integral

    lo, hi = 1e-6, 1e6
    if residual(lo) * residual(hi) > 0:
        raise NumericalError(
            f"could not bracket the MRS number in [{lo:g}, {hi:g}] "
            f"(alpha={alpha}, n={n}, residuals {residual(lo):.3g}, {residual(hi):.3g})"
        )
    return brentq(residual, lo, hi, xtol=1e-300, rtol=max(tol, 4 * np.finfo(float).eps), maxiter=500)


def contraction_factor(fw: FreudWeight, n: int) -> float:
    if n < 1:
        raise ValueError("n must be >= 1")
    return float(n) ** (-1.0 / fw.alpha)


def zeta(fw: FreudWeight, n: int) -> float:
    return (fw.alpha * n) ** (-2.0 / 3.0)


def phi_n(fw: FreudWeight, n: int, t):
    """Bernstein scale function

        |t - a_2n| |t + a_2n| / (n sqrt((|t + a_n| - a_n zeta_n)(|t - a_n| + a_n zeta_n)))

    with zeta_n = (alpha n)^(-2/3). No cap is applied to zeta_n for small n.
    Raises DomainError where the first radicand factor is not positive.
    """
    t_arr = _check_finite(t)
    a_n = mrs_number(fw, n)
    a_2n = mrs_number(fw, 2 * n)
    z = zeta(fw, n)
    left = np.abs(t_arr + a_n) - a_n * z
    right = np.abs(t_arr - a_n) + a_n * z
    if np.any(left <= 0):
        raise DomainError(
            f"phi_n radicand factor |t + a_n| - a_n*zeta_n is not positive (a_n={a_n:.6g}, zeta_n={z:.6g})"
        )
    if np.any(right <= 0):
        raise DomainError("phi_n radicand factor |t - a_n| + a_n*zeta_n is not positive")
    out = np.abs(t_arr - a_2n) * np.abs(t_arr + a_2n) / (n * np.sqrt(left * right))
    return _scalar_or_array(out)


def phi_n_defined(fw: FreudWeight, n: int, t) -> np.ndarray:
    """Mask of points where :func:`phi_n` has a positive radicand."""
    t = np.asarray(t, dtype=float)
    a_n = mrs_number(fw, n)
    return np.abs(t + a_n) - a_n * zeta(fw, n) > 0


def phi_n_symmetric(fw: FreudWeight, n: int, t):
    """Bernstein scale function with both edge factors shifted outward,

        |t - a_2n| |t + a_2n| / (n sqrt((|t + a_n| + a_n zeta_n)(|t - a_n| + a_n zeta_n))),

    which stays finite and positive on all of [-a_n, a_n].
    """
    t_arr = _check_finite(t)
    a_n = mrs_number(fw, n)
    a_2n = mrs_number(fw, 2 * n)
    z = zeta(fw, n)
    den = (np.abs(t_arr + a_n) + a_n * z) * (np.abs(t_arr - a_n) + a_n * z)
    out = np.abs(t_arr - a_2n) * np.abs(t_arr + a_2n) / (n * np.sqrt(den))
    return _scalar_or_array(out)
