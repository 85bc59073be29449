"""Self-contained SVG scatter plots: axes, points, optional colour legend."""
from __future__ import annotations

import math
from typing import Sequence
from xml.sax.saxutils import escape

ZERO_COLOR = "#bbbbbb"
_LOW, _HIGH = (68, 1, 84), (253, 231, 37)
_MARGIN = 70


def _lerp_color(t: float) -> str:
    t = min(1.0, max(0.0, t))
    r, g, b = (round(a + (b - a) * t) for a, b in zip(_LOW, _HIGH))
    return f"#{r:02x}{g:02x}{b:02x}"


def _ticks(lo: float, hi: float, count: int = 5) -> list[float]:
    if hi <= lo:
        return [lo]
    return [lo + (hi - lo) * i / (count - 1) for i in range(count)]


def scatter(xs: Sequence[float], ys: Sequence[float], *, title: str = "",
            xlabel: str = "", ylabel: str = "",
            color_values: Sequence[float | None] | None = None,
            color_label: str = "", zero_label: str = "zero",
            width: int = 800, height: int = 600) -> str:
    """Render a scatter chart.

    ``color_values`` entries of ``None`` are drawn in the reserved zero
    colour; the rest are mapped linearly onto a two-stop gradient.
    """
    if len(xs) != len(ys):
        raise ValueError("xs and ys differ in length")
    legend_w = 120 if color_values is not None else 0
    plot_w = width - 2 * _MARGIN - legend_w
    plot_h = height - 2 * _MARGIN
    xlo, xhi = (min(xs), max(xs)) if xs else (0.0, 1.0)
    ylo, yhi = (min(ys), max(ys)) if ys else (0.0, 1.0)
    if xhi == xlo:
        xlo, xhi = xlo - 0.5, xhi + 0.5
    if yhi == ylo:
        ylo, yhi = ylo - 0.5, yhi + 0.5

    def px(x):
        return _MARGIN + (x - xlo) / (xhi - xlo) * plot_w

    def py(y):
        return height - _MARGIN - (y - ylo) / (yhi - ylo) * plot_h

    finite = [c for c in (color_values or []) if c is not None and math.isfinite(c)]
    clo, chi = (min(finite), max(finite)) if finite else (0.0, 1.0)

    def color(c):
        if c is None:
            return ZERO_COLOR
        return _lerp_color((c - clo) / (chi - clo) if chi > clo else 0.5)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<text x="{width / 2:.1f}" y="30" text-anchor="middle" font-size="16">{escape(title)}</text>',
        f'<line x1="{_MARGIN}" y1="{height - _MARGIN}" x2="{_MARGIN + plot_w}" '
        f'y2="{height - _MARGIN}" stroke="black"/>',
        f'<line x1="{_MARGIN}" y1="{_MARGIN}" x2="{_MARGIN}" y2="{height - _MARGIN}" stroke="black"/>',
    ]
    for t in _ticks(xlo, xhi):
        out.append(f'<text x="{px(t):.1f}" y="{height - _MARGIN + 18}" text-anchor="middle" '
                   f'font-size="11">{t:.3g}</text>')
    for t in _ticks(ylo, yhi):
        out.append(f'<text x="{_MARGIN - 8}" y="{py(t) + 4:.1f}" text-anchor="end" '
                   f'font-size="11">{t:.3g}</text>')
    out.append(f'<text x="{_MARGIN + plot_w / 2:.1f}" y="{height - 20}" text-anchor="middle" '
               f'font-size="13">{escape(xlabel)}</text>')
    out.append(f'<text x="20" y="{_MARGIN + plot_h / 2:.1f}" text-anchor="middle" font-size="13" '
               f'transform="rotate(-90 20 {_MARGIN + plot_h / 2:.1f})">{escape(ylabel)}</text>')
    colors = color_values if color_values is not None else [0.0] * len(xs)
    for x, y, c in zip(xs, ys, colors):
        fill = color(c) if color_values is not None else "#1f77b4"
        out.append(f'<circle cx="{px(x):.2f}" cy="{py(y):.2f}" r="3" fill="{fill}" fill-opacity="0.7"/>')
    if color_values is not None:
        lx = width - _MARGIN - legend_w + 30
        out.append(f'<text x="{lx}" y="{_MARGIN - 10}" font-size="12">{escape(color_label)}</text>')
        steps = 20
        for i in range(steps):
            y = _MARGIN + (steps - 1 - i) * 10
            out.append(f'<rect x="{lx}" y="{y}" width="16" height="10" fill="{_lerp_color(i / (steps - 1))}"/>')
        out.append(f'<text x="{lx + 22}" y="{_MARGIN + 10}" font-size="11">{chi:.3g}</text>')
        out.append(f'<text x="{lx + 22}" y="{_MARGIN + steps * 10}" font-size="11">{clo:.3g}</text>')
        zy = _MARGIN + steps * 10 + 20
        out.append(f'<rect x="{lx}" y="{zy}" width="16" height="10" fill="{ZERO_COLOR}"/>')
        out.append(f'<text x="{lx + 22}" y="{zy + 10}" font-size="11">{escape(zero_label)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
