"""Static SVG pictures of point sets, families, and partition lines.

Output is deterministic for identical input: iteration orders are fixed
and every coordinate is formatted through the same integer/centi-unit
path, so the same scene always produces byte-identical SVG.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from .construct import Family
from .geom import PointSet

MEMBER_PALETTE = (
    "#1a9850",  # green
    "#d73027",  # red
    "#4575b4",  # blue
    "#e08214",
    "#762a83",
    "#35978f",
    "#c51b7d",
    "#8c510a",
)
POINT_FILL = {"r": "#c0392b", "b": "#2980b9", None: "#1b1b1b"}


def _fmt(v) -> str:
    """Fixed two-decimal formatting; trims to int form when exact."""
    f = Fraction(v).limit_denominator(10**9)
    cents = round(f * 100)
    if cents % 100 == 0:
        return str(cents // 100)
    return f"{cents / 100:.2f}"


def _clip_line(a: int, b: int, c: int, x0, x1, y0, y1
               ) -> Optional[Tuple[Fraction, Fraction, Fraction, Fraction]]:
    """Segment of a*x + b*y + c = 0 inside the [x0,x1]x[y0,y1] box."""
    pts: List[Tuple[Fraction, Fraction]] = []
    if b != 0:
        for x in (x0, x1):
            y = Fraction(-(a * x + c), b)
            if y0 <= y <= y1:
                pts.append((Fraction(x), y))
    if a != 0:
        for y in (y0, y1):
            x = Fraction(-(b * y + c), a)
            if x0 <= x <= x1:
                pts.append((x, Fraction(y)))
    uniq = sorted(set(pts))
    if len(uniq) < 2:
        return None
    (px, py), (qx, qy) = uniq[0], uniq[-1]
    if (px, py) == (qx, qy):
        return None
    return px, py, qx, qy


def render_svg(ps: PointSet, family: Optional[Family] = None,
               lines: Optional[Iterable[Sequence[int]]] = None,
               width: int = 800) -> str:
    pts = sorted(ps, key=lambda p: p.id)
    xs = [p.x for p in pts]
    ys = [p.y for p in pts]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    span = max(x1 - x0, y1 - y0, 1)
    m = max(span // 12, 4)
    w = (x1 - x0) + 2 * m
    h = (y1 - y0) + 2 * m

    def tx(x):
        return x - x0 + m

    def ty(y):
        return (y1 - y) + m          # flip: SVG y runs downward

    r = max(span // 120, 2)
    stroke = max(span // 320, 1)
    font = r * 3

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{max(1, round(width * h / w))}" viewBox="0 0 {w} {h}">',
        f'<rect width="{w}" height="{h}" fill="#ffffff"/>',
    ]

    all_lines: List[Sequence[int]] = []
    if family is not None:
        all_lines.extend(family.meta.get("lines", ()))
    if lines is not None:
        all_lines.extend(lines)
    for ln in all_lines:
        a, b, c = int(ln[0]), int(ln[1]), int(ln[2])
        seg = _clip_line(a, b, c, x0 - m, x1 + m, y0 - m, y1 + m)
        if seg is None:
            continue
        px, py, qx, qy = seg
        out.append(
            f'<line x1="{_fmt(tx(px))}" y1="{_fmt(ty(py))}" '
            f'x2="{_fmt(tx(qx))}" y2="{_fmt(ty(qy))}" '
            f'stroke="#888888" stroke-width="{stroke}" '
            f'stroke-dasharray="{stroke * 4} {stroke * 3}"/>')

    if family is not None:
        for mi, g in enumerate(family.members):
            color = MEMBER_PALETTE[mi % len(MEMBER_PALETTE)]
            for e in g.edges:
                p, q = ps[e.a], ps[e.b]
                out.append(
                    f'<line x1="{tx(p.x)}" y1="{ty(p.y)}" '
                    f'x2="{tx(q.x)}" y2="{ty(q.y)}" '
                    f'stroke="{color}" stroke-width="{stroke * 2}" '
                    f'stroke-linecap="round"/>')

    for p in pts:
        out.append(f'<circle cx="{tx(p.x)}" cy="{ty(p.y)}" r="{r}" '
                   f'fill="{POINT_FILL.get(p.color, "#1b1b1b")}"/>')
    for p in pts:
        out.append(f'<text x="{tx(p.x) + r * 2}" y="{ty(p.y) - r}" '
                   f'font-family="sans-serif" font-size="{font}" '
                   f'fill="#333333">{p.id}</text>')

    out.append("</svg>")
    return "\n".join(out) + "\n"
