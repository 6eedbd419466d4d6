"""Vectorised interval-wise maximisation: uniform probing, golden-section, derivative polish."""

from __future__ import annotations

import math

import numpy as np

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


def golden_section_max(f, a, b, xtol):
    """Golden-section search for the maximum of ``f`` on each bracket [a[i], b[i]].

    ``f`` must accept an array shaped like ``a`` and return an array of the same
    shape. Returns (x, fx) for the best point visited in each bracket.
    """
    a = np.array(a, dtype=float)
    b = np.array(b, dtype=float)
    width = float(np.max(b - a)) if a.size else 0.0
    if width <= xtol:
        x = 0.5 * (a + b)
        return x, f(x)
    n_iter = int(math.ceil(math.log(xtol / width) / math.log(INV_PHI)))

    c = b - INV_PHI * (b - a)
    d = a + INV_PHI * (b - a)
    fc = f(c)
    fd = f(d)
    for _ in range(n_iter):
        right = fd > fc
        a = np.where(right, c, a)
        b = np.where(right, b, d)
        c_next = np.where(right, d, b - INV_PHI * (b - a))
        d_next = np.where(right, a + INV_PHI * (b - a), c)
        probe = np.where(right, d_next, c_next)
        fp = f(probe)
        fc, fd = np.where(right, fd, fp), np.where(right, fp, fc)
        c, d = c_next, d_next
    take_d = fd > fc
    return np.where(take_d, d, c), np.where(take_d, fd, fc)


def bisect_decreasing_root(g, lo, hi, n_iter=200):
    """Locate the sign change of a decreasing function ``g`` on each [lo, hi]."""
    lo = np.array(lo, dtype=float)
    hi = np.array(hi, dtype=float)
    for _ in range(n_iter):
        mid = 0.5 * (lo + hi)
        if np.all((mid == lo) | (mid == hi)):
            break
        pos = g(mid) > 0
        lo = np.where(pos, mid, lo)
        hi = np.where(pos, hi, mid)
    return 0.5 * (lo + hi)


def maximize_on_intervals(f, breaks, probes=32, xtol=1e-13, df=None):
    """Maximise ``f`` separately on each interval [breaks[i], breaks[i+1]].

    Each interval gets ``probes`` uniformly spaced probes (endpoints included),
    the best probe is refined by golden-section on its neighbouring probes, and,
    when ``df`` is supplied and the function is concave on the interval, the
    result is polished by bisection on the derivative. The polish matters where
    the objective is flat to machine precision around its peak, which limits
    golden-section to roughly sqrt(eps) accuracy in x.

    Returns (x_best, f_best), one entry per interval.
    """
    breaks = np.asarray(breaks, dtype=float)
    if probes < 4:
        raise ValueError("need at least 4 probes per interval")
    left = breaks[:-1]
    right = breaks[1:]
    width = right - left
    s = np.linspace(0.0, 1.0, probes)
    grid = left[:, None] + width[:, None] * s[None, :]
    grid[:, -1] = right
    with np.errstate(divide="ignore", invalid="ignore"):
        vals = f(grid)
    vals = np.where(np.isnan(vals), -np.inf, vals)
    idx = np.argmax(vals, axis=1)
    rows = np.arange(len(left))
    best_x = grid[rows, idx]
    best_f = vals[rows, idx]

    lo = grid[rows, np.maximum(idx - 1, 0)]
    hi = grid[rows, np.minimum(idx + 1, probes - 1)]

    def fsafe(x):
        with np.errstate(divide="ignore", invalid="ignore"):
            v = f(x)
        return np.where(np.isnan(v), -np.inf, v)

    gx, gf = golden_section_max(fsafe, lo, hi, xtol)
    better = gf > best_f
    best_x = np.where(better, gx, best_x)
    best_f = np.where(better, gf, best_f)

    if df is not None:
        h = np.maximum(1e-7 * width, 100 * xtol)
        a = np.maximum(best_x - h, left)
        b = np.minimum(best_x + h, right)

        def dsafe(x):
            with np.errstate(divide="ignore", invalid="ignore"):
                return df(x)

        da, db = dsafe(a), dsafe(b)
        ok = (da > 0) & (db < 0) & np.isfinite(best_f)
        if np.any(ok):
            px = bisect_decreasing_root(dsafe, a[ok], b[ok])
            pf = fsafe(px)
            keep = pf >= best_f[ok] - 4 * np.finfo(float).eps * np.maximum(1.0, np.abs(best_f[ok]))
            sel = np.flatnonzero(ok)[keep]
            best_x[sel] = px[keep]
            best_f[sel] = pf[keep]
    return best_x, best_f
