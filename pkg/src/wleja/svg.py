"""Minimal self-contained SVG line plots (one panel per series, linear axes)."""

from __future__ import annotations

from xml.sax.saxutils import escape

PANEL_W, PANEL_H = 420, 300
PAD_L, PAD_R, PAD_T, PAD_B = 70, 20, 40, 45


def _ticks(lo, hi, count=5):
    if hi == lo:
        return [lo]
    step = (hi - lo) / (count - 1)
    return [lo + i * step for i in range(count)]


def _panel(label, xs, ys, ox, xlabel):
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    if x1 == x0:
        x0, x1 = x0 - 1, x1 + 1
    if y1 == y0:
        y0, y1 = y0 - 1, y1 + 1
    pw = PANEL_W - PAD_L - PAD_R
    ph = PANEL_H - PAD_T - PAD_B

    def sx(x):
        return ox + PAD_L + (x - x0) / (x1 - x0) * pw

    def sy(y):
        return PAD_T + ph - (y - y0) / (y1 - y0) * ph

    parts = [
        f'<rect x="{ox + PAD_L}" y="{PAD_T}" width="{pw}" height="{ph}" fill="none" stroke="#333"/>',
        f'<text x="{ox + PAD_L + pw / 2:.1f}" y="{PAD_T - 12}" text-anchor="middle" font-size="14">{escape(label)}</text>',
        f'<text x="{ox + PAD_L + pw / 2:.1f}" y="{PANEL_H - 8}" text-anchor="middle" font-size="12">{escape(xlabel)}</text>',
    ]
    for t in _ticks(x0, x1):
        parts.append(f'<line x1="{sx(t):.2f}" y1="{PAD_T + ph}" x2="{sx(t):.2f}" y2="{PAD_T + ph + 5}" stroke="#333"/>')
        parts.append(f'<text x="{sx(t):.2f}" y="{PAD_T + ph + 18}" text-anchor="middle" font-size="10">{t:.4g}</text>')
    for t in _ticks(y0, y1):
        parts.append(f'<line x1="{ox + PAD_L - 5}" y1="{sy(t):.2f}" x2="{ox + PAD_L}" y2="{sy(t):.2f}" stroke="#333"/>')
        parts.append(f'<text x="{ox + PAD_L - 8}" y="{sy(t) + 3:.2f}" text-anchor="end" font-size="10">{t:.4g}</text>')
    pts = " ".join(f"{sx(x):.2f},{sy(y):.2f}" for x, y in zip(xs, ys))
    parts.append(f'<polyline points="{pts}" fill="none" stroke="#1f5fa8" stroke-width="2"/>')
    for x, y in zip(xs, ys):
        parts.append(f'<circle cx="{sx(x):.2f}" cy="{sy(y):.2f}" r="3" fill="#1f5fa8"/>')
    return parts


def line_plot_svg(series, title="", xlabel="x") -> str:
    """``series`` is a list of (label, xs, ys); each gets its own panel side by side."""
    width = PANEL_W * len(series)
    height = PANEL_H + 30
    body = [f'<text x="{width / 2:.1f}" y="20" text-anchor="middle" font-size="15">{escape(title)}</text>',
            '<g transform="translate(0,30)">']
    for i, (label, xs, ys) in enumerate(series):
        body.extend(_panel(label, list(map(float, xs)), list(map(float, ys)), i * PANEL_W, xlabel))
    body.append("</g>")
    return (
        f'<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="sans-serif">\n'
        f'<rect width="100%" height="100%" fill="white"/>\n' + "\n".join(body) + "\n</svg>\n"
    )
