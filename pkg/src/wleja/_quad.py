"""Gauss-Legendre rules, plain and geometrically graded toward interval ends."""

from __future__ import annotations

from functools import lru_cache

import numpy as np


@lru_cache(maxsize=None)
def gauss_legendre01(order: int):
    """Nodes and weights on [0, 1]."""
    t, w = np.polynomial.legendre.leggauss(order)
    x = 0.5 * (t + 1.0)
    x.setflags(write=False)
    w = 0.5 * w
    w.setflags(write=False)
    return x, w


@lru_cache(maxsize=None)
def _graded01(levels: int, ratio: float, order: int, left: bool, right: bool):
    # panel breaks on [0, 1], refined geometrically toward the flagged ends
    lb = [0.5 * ratio**k for k in range(levels, 0, -1)] if left else []
    rb = [1.0 - 0.5 * ratio**k for k in range(1, levels + 1)] if right else []
    breaks = np.array([0.0] + lb + [0.5] + rb + [1.0])
    x0, w0 = gauss_legendre01(order)
    h = np.diff(breaks)
    nodes = (breaks[:-1, None] + h[:, None] * x0).ravel()
    weights = (h[:, None] * w0).ravel()
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def graded_rule(p, q, *, left=True, right=True, levels=14, ratio=0.15, order=16):
    """Composite Gauss-Legendre on [p, q], panels shrinking geometrically toward
    the flagged endpoints. Integrates endpoint singularities of algebraic and
    logarithmic type to near machine precision."""
    x, w = _graded01(levels, ratio, order, bool(left), bool(right))
    return p + (q - p) * x, (q - p) * w
