"""Static SVG figures of plane curves in an affine chart."""

from __future__ import annotations

import math
from fractions import Fraction
from xml.sax.saxutils import escape

from .errors import DimensionMismatch
from .polycore import MultiPoly, evaluate, gradient

PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2"]
SIZE = 480
MARGIN = 30


def _affine(x, chart):
    if x[chart] == 0:
        return None
    return tuple(float(x[i]) / float(x[chart]) for i in range(3) if i != chart)


def render_svg(C: MultiPoly, curve_points=(), ovals=(), cone_points=(), arrows=(), chart: int = 2,
               title: str = "", extent: float | None = None) -> str:
    """Plot in the chart ``x_chart = 1``.

    ``curve_points``: CurvePoints; ``ovals``: index groups into them used for
    colors; ``cone_points``: (point, component index) pairs; ``arrows``:
    (CurvePoint, sign) pairs drawn along the rotated gradient.
    """
    if C.nvars != 3:
        raise DimensionMismatch("SVG rendering needs a plane curve (3 variables)")
    color_of = {}
    for k, group in enumerate(ovals):
        for i in group:
            color_of[i] = PALETTE[k % len(PALETTE)]
    pts = []
    for i, p in enumerate(curve_points):
        a = _affine(p.approx(), chart)
        if a is not None:
            pts.append((a, color_of.get(i, "#333333")))
    cones = []
    for x, comp in cone_points:
        a = _affine(x, chart)
        if a is not None:
            cones.append((a, PALETTE[comp % len(PALETTE)]))
    if extent is None:
        coords = [abs(c) for a, _ in pts + cones for c in a]
        extent = min(max(coords, default=1.0) * 1.1, 4.0)
        extent = max(extent, 1.0)

    scale = (SIZE - 2 * MARGIN) / (2 * extent)

    def to_px(a):
        return MARGIN + (a[0] + extent) * scale, MARGIN + (extent - a[1]) * scale

    def inside(a):
        return abs(a[0]) <= extent and abs(a[1]) <= extent

    names = [f"x{i + 1}" for i in range(3) if i != chart]
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE + 40}" '
        f'viewBox="0 0 {SIZE} {SIZE + 40}">',
        f'<rect x="0" y="0" width="{SIZE}" height="{SIZE + 40}" fill="white"/>',
        f'<rect x="{MARGIN}" y="{MARGIN}" width="{SIZE - 2 * MARGIN}" height="{SIZE - 2 * MARGIN}" '
        'fill="none" stroke="#999999"/>',
    ]
    cx, cy = to_px((0.0, 0.0))
    out.append(f'<line x1="{MARGIN}" y1="{cy:.2f}" x2="{SIZE - MARGIN}" y2="{cy:.2f}" stroke="#dddddd"/>')
    out.append(f'<line x1="{cx:.2f}" y1="{MARGIN}" x2="{cx:.2f}" y2="{SIZE - MARGIN}" stroke="#dddddd"/>')
    for a, color in cones:
        if inside(a):
            x, y = to_px(a)
            out.append(f'<rect x="{x - 2.5:.2f}" y="{y - 2.5:.2f}" width="5" height="5" fill="{color}" '
                       'fill-opacity="0.35"/>')
    for a, color in pts:
        if inside(a):
            x, y = to_px(a)
            out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="1.6" fill="{color}"/>')
    grad = gradient(C)
    for p, sign in arrows:
        x = p.approx()
        a = _affine(x, chart)
        if a is None or not inside(a):
            continue
        y = [Fraction(c) / Fraction(x[chart]) for c in x]
        g = [float(evaluate(G, y)) for G in grad]
        i, j = [k for k in range(3) if k != chart]
        # rotated gradient at the chart representative, as in orientation_sign
        tx, ty = -g[j] * sign, g[i] * sign
        norm = math.hypot(tx, ty)
        if norm == 0:
            continue
        tx, ty = tx / norm, ty / norm
        x0, y0 = to_px(a)
        x1, y1 = x0 + 14 * tx, y0 - 14 * ty
        out.append(f'<line x1="{x0:.2f}" y1="{y0:.2f}" x2="{x1:.2f}" y2="{y1:.2f}" stroke="black" '
                   'stroke-width="1"/>')
        out.append(f'<circle cx="{x1:.2f}" cy="{y1:.2f}" r="1.2" fill="black"/>')
    label = f"chart x{chart + 1} = 1; horizontal {names[0]}, vertical {names[1]}"
    out.append(f'<text x="{MARGIN}" y="{SIZE - 8}" font-size="12" font-family="sans-serif">{escape(label)}</text>')
    legend = title
    if not pts:
        legend = (legend + "; " if legend else "") + "no real curve points found"
    if legend:
        out.append(f'<text x="{MARGIN}" y="{SIZE + 14}" font-size="12" font-family="sans-serif">'
                   f'{escape(legend)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"

