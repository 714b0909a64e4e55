"""Static SVG chord diagrams.

Points sit on a circle, clockwise from 12 o'clock, labelled 1..2n.  Output
is byte-stable: coordinates are printed with three decimals and elements
are emitted in canonical chord order.
"""

from __future__ import annotations

import math
import re
from itertools import combinations

from .matchcore import Chord, chords_cross

SIZE = 400
RADIUS = 150.0
LABEL_RADIUS = 172.0


def _fmt(x: float) -> str:
    s = f"{x:.3f}"
    return "0.000" if s == "-0.000" else s


def _point(i: int, N: int, r: float) -> tuple[float, float]:
    theta = 2 * math.pi * i / N - math.pi / 2
    return SIZE / 2 + r * math.cos(theta), SIZE / 2 + r * math.sin(theta)


def render_svg(n: int, chords: list[Chord], highlight: bool = True, title: str | None = None) -> str:
    """SVG text for 0-based ``chords`` on ``2n`` points.

    With ``highlight`` every chord taking part in a crossing is drawn in red.
    Free points (partial matchings) are drawn hollow.
    """
    N = 2 * n
    chords = sorted((min(a, b), max(a, b)) for a, b in chords)
    crossing = set()
    if highlight:
        for c1, c2 in combinations(chords, 2):
            if chords_cross(c1, c2):
                crossing.update((c1, c2))
    used = {p for c in chords for p in c}
    c = _fmt(SIZE / 2)
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">',
    ]
    if title:
        out.append(f"<title>{title}</title>")
    out.append(f'<circle cx="{c}" cy="{c}" r="{_fmt(RADIUS)}" fill="none" stroke="#888" stroke-width="1"/>')
    for a, b in chords:
        x1, y1 = _point(a, N, RADIUS)
        x2, y2 = _point(b, N, RADIUS)
        color, cls = ("#d62728", "chord crossing") if (a, b) in crossing else ("#1f4e79", "chord")
        out.append(
            f'<line class="{cls}" data-a="{a + 1}" data-b="{b + 1}" x1="{_fmt(x1)}" y1="{_fmt(y1)}" '
            f'x2="{_fmt(x2)}" y2="{_fmt(y2)}" stroke="{color}" stroke-width="2"/>'
        )
    for i in range(N):
        x, y = _point(i, N, RADIUS)
        fill = "#000" if i in used else "#fff"
        out.append(f'<circle class="point" cx="{_fmt(x)}" cy="{_fmt(y)}" r="4" fill="{fill}" stroke="#000"/>')
        lx, ly = _point(i, N, LABEL_RADIUS)
        out.append(
            f'<text x="{_fmt(lx)}" y="{_fmt(ly)}" font-size="12" text-anchor="middle" '
            f'dominant-baseline="middle">{i + 1}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


_CHORD_RE = re.compile(r'<line class="chord[^"]*" data-a="(\d+)" data-b="(\d+)"')


def parse_svg_chords(svg: str) -> list[Chord]:
    """0-based chords recovered from :func:`render_svg` output."""
    return [(int(a) - 1, int(b) - 1) for a, b in _CHORD_RE.findall(svg)]
