"""Minimal standalone SVG rendering for scatter and donut plot data.

Deliberately spartan: axes, threshold lines, points, ring segments, and
a legend. Output is deterministic (fixed float formatting, no ids or
timestamps) so rendered files can be byte-compared across runs.
"""

from __future__ import annotations

import math

from .pipeline import Zone
from .plotdata import DONUT, SCATTER, PlotData

SIZE = 640
MARGIN = 60

ZONE_COLORS = {
    Zone.COMMON: "#8c8c8c",
    Zone.UNCOMMON_Y: "#2e7d32",
    Zone.UNCOMMON_X: "#1565c0",
    Zone.HYBRID: "#c62828",
    None: "#cccccc",
}

RING_PALETTE = ["#8c8c8c", "#1565c0", "#2e7d32", "#c62828", "#ef6c00",
                "#6a1b9a", "#00838f", "#9e9d24", "#4e342e", "#37474f"]


def _f(v: float) -> str:
    return format(v, ".2f")


def scatter_svg(plot: PlotData) -> str:
    if plot.kind != SCATTER:
        raise ValueError("scatter_svg needs scatter plot data")
    span = SIZE - 2 * MARGIN

    def sx(v: float) -> float:
        return MARGIN + v * span

    def sy(v: float) -> float:
        return SIZE - MARGIN - v * span

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
        f'<rect width="{SIZE}" height="{SIZE}" fill="white"/>',
        f'<line x1="{_f(sx(0))}" y1="{_f(sy(0))}" x2="{_f(sx(1))}" y2="{_f(sy(0))}" stroke="black"/>',
        f'<line x1="{_f(sx(0))}" y1="{_f(sy(0))}" x2="{_f(sx(0))}" y2="{_f(sy(1))}" stroke="black"/>',
        f'<text x="{_f(sx(0.5))}" y="{SIZE - 15}" text-anchor="middle" font-size="16">'
        f'{plot.x_label} outlier score</text>',
        f'<text x="18" y="{_f(sy(0.5))}" text-anchor="middle" font-size="16" '
        f'transform="rotate(-90 18 {_f(sy(0.5))})">{plot.y_label} outlier score</text>',
    ]
    if plot.threshold is not None:
        th = plot.threshold
        parts.append(f'<line x1="{_f(sx(th))}" y1="{_f(sy(0))}" x2="{_f(sx(th))}" '
                     f'y2="{_f(sy(1))}" stroke="#555" stroke-dasharray="6,4"/>')
        parts.append(f'<line x1="{_f(sx(0))}" y1="{_f(sy(th))}" x2="{_f(sx(1))}" '
                     f'y2="{_f(sy(th))}" stroke="#555" stroke-dasharray="6,4"/>')
    for tick in (0.0, 0.25, 0.5, 0.75, 1.0):
        parts.append(f'<text x="{_f(sx(tick))}" y="{_f(sy(0) + 20)}" text-anchor="middle" '
                     f'font-size="11">{_f(tick)}</text>')
        parts.append(f'<text x="{_f(sx(0) - 10)}" y="{_f(sy(tick) + 4)}" text-anchor="end" '
                     f'font-size="11">{_f(tick)}</text>')
    for pt in plot.points:
        color = ZONE_COLORS[pt.zone]
        if pt.highlighted:
            parts.append(f'<circle cx="{_f(sx(pt.x_score))}" cy="{_f(sy(pt.y_score))}" '
                         f'r="4" fill="{color}" fill-opacity="0.9"/>')
        else:
            parts.append(f'<circle cx="{_f(sx(pt.x_score))}" cy="{_f(sy(pt.y_score))}" '
                         f'r="3" fill="#bbbbbb" fill-opacity="0.5"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _arc_path(cx: float, cy: float, r0: float, r1: float,
              a0: float, a1: float) -> str:
    """Annular sector from angle a0 to a1 (degrees, clockwise from 12 o'clock)."""
    def point(r: float, a: float) -> tuple[float, float]:
        rad = math.radians(a - 90.0)
        return cx + r * math.cos(rad), cy + r * math.sin(rad)

    large = 1 if (a1 - a0) > 180.0 else 0
    x0, y0 = point(r1, a0)
    x1, y1 = point(r1, a1)
    x2, y2 = point(r0, a1)
    x3, y3 = point(r0, a0)
    return (f"M {_f(x0)} {_f(y0)} A {_f(r1)} {_f(r1)} 0 {large} 1 {_f(x1)} {_f(y1)} "
            f"L {_f(x2)} {_f(y2)} A {_f(r0)} {_f(r0)} 0 {large} 0 {_f(x3)} {_f(y3)} Z")


def donut_svg(plot: PlotData) -> str:
    if plot.kind != DONUT:
        raise ValueError("donut_svg needs donut plot data")
    cx = cy = SIZE / 2.0
    rings = {0: (150.0, 220.0), 1: (80.0, 145.0)}
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
        f'<rect width="{SIZE}" height="{SIZE}" fill="white"/>',
    ]
    labels = [s.label for s in plot.segments if s.label is not None]
    color_of = {label: RING_PALETTE[i % len(RING_PALETTE)]
                for i, label in enumerate(dict.fromkeys(labels))}
    legend_y = 20
    for ring in (0, 1):
        r0, r1 = rings[ring]
        angle = 0.0
        for seg in plot.segments:
            if seg.ring != ring or seg.percent <= 0.0:
                continue
            sweep = 360.0 * seg.percent / 100.0
            if seg.label is None:
                angle += sweep
                continue
            # a 360-degree arc degenerates to nothing; hold back a sliver
            end = angle + min(sweep, 359.99)
            path = _arc_path(cx, cy, r0, r1, angle, min(end, 360.0))
            parts.append(f'<path d="{path}" fill="{color_of[seg.label]}" '
                         f'stroke="white" stroke-width="1"/>')
            angle += sweep
    for label, color in color_of.items():
        parts.append(f'<rect x="8" y="{legend_y - 10}" width="12" height="12" fill="{color}"/>')
        parts.append(f'<text x="26" y="{legend_y}" font-size="12">{label}</text>')
        legend_y += 18
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
