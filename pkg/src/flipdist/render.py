"""Static SVG rendering of triangulations.

Vertices sit on a circle with label 0 at the top and labels increasing
clockwise; interior edges are chords. Output bytes are deterministic for a
fixed input.
"""

from __future__ import annotations

import math

from .polygon import Triangulation

_STYLE = (
    "circle { fill: #1a1a1a; } "
    "line.boundary { stroke: #888888; stroke-width: 1.5; } "
    "line.interior { stroke: #0a5bd3; stroke-width: 2; } "
    "text { font-family: monospace; font-size: 14px; fill: #1a1a1a; }"
)


def _positions(n: int, cx: float, cy: float, r: float) -> list[tuple[float, float]]:
    pts = []
    for k in range(n):
        ang = 2.0 * math.pi * k / n
        pts.append((cx + r * math.sin(ang), cy - r * math.cos(ang)))
    return pts


def render_svg(t: Triangulation, size: int = 400) -> str:
    n = t.n
    cx = cy = size / 2.0
    r = size * 0.42
    pts = _positions(n, cx, cy, r)
    labels = _positions(n, cx, cy, r + size * 0.055)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        f"<style>{_STYLE}</style>",
    ]
    for k in range(n):
        x1, y1 = pts[k]
        x2, y2 = pts[(k + 1) % n]
        out.append(
            f'<line class="boundary" x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}"/>'
        )
    for a, b in sorted(t.interior):
        x1, y1 = pts[a]
        x2, y2 = pts[b]
        out.append(
            f'<line class="interior" x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}"/>'
        )
    for k in range(n):
        x, y = pts[k]
        out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="3"/>')
        lx, ly = labels[k]
        out.append(
            f'<text x="{lx:.2f}" y="{ly:.2f}" text-anchor="middle" '
            f'dominant-baseline="middle">{k}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
