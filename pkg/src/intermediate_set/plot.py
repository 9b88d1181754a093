"""SVG pictures of three-player solution sets in barycentric coordinates.

A payoff vector ``x`` with ``x(N) = s`` is drawn at ``((x2 - x1) u + x3 w) / s``
with ``u = (1, 0)`` and ``w = (0, sqrt 3)``, so the scaled standard simplex
becomes the equilateral triangle with corners ``-u``, ``u`` and ``w`` (side 2).
Decimals appear only here, rounded to 6 significant digits.
"""

from __future__ import annotations

import math
from fractions import Fraction

from . import solutions
from .game import Game

SIZE = 400
MARGIN = 30
SQRT3 = math.sqrt(3)


def to_plane(x, s) -> tuple[float, float]:
    s = s if s != 0 else Fraction(1)
    return float((x[1] - x[0]) / s), float(x[2] / s) * SQRT3


def _num(t: float) -> str:
    out = f"{t:.6g}"
    return "0" if out == "-0" else out


def _ordered(points):
    # counter-clockwise around the centroid; enough for convex outlines
    cx = sum(p[0] for p in points) / len(points)
    cy = sum(p[1] for p in points) / len(points)
    return sorted(points, key=lambda p: math.atan2(p[1] - cy, p[0] - cx))


class _Canvas:
    def __init__(self, pts):
        xs = [p[0] for p in pts]
        ys = [p[1] for p in pts]
        self.x0, self.y1 = min(xs), max(ys)
        span = max(max(xs) - min(xs), max(ys) - min(ys), 1e-9)
        self.k = (SIZE - 2 * MARGIN) / span

    def xy(self, p) -> str:
        return f"{_num(MARGIN + (p[0] - self.x0) * self.k)},{_num(MARGIN + (self.y1 - p[1]) * self.k)}"

    def shape(self, pts, cls: str) -> str:
        pts = sorted(set(pts))
        if len(pts) == 1:
            x, y = self.xy(pts[0]).split(",")
            return f'<circle class="{cls}" cx="{x}" cy="{y}" r="4"/>'
        if len(pts) == 2 or _collinear(pts):
            a, b = min(pts), max(pts)
            (x1, y1), (x2, y2) = self.xy(a).split(","), self.xy(b).split(",")
            return f'<line class="{cls}" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>'
        return f'<polygon class="{cls}" points="{" ".join(self.xy(p) for p in _ordered(pts))}"/>'


def _collinear(pts) -> bool:
    (ax, ay), (bx, by) = pts[0], pts[-1]
    return all(abs((bx - ax) * (py - ay) - (by - ay) * (px - ax)) < 1e-12 for px, py in pts)


STYLE = (
    ".simplex{fill:none;stroke:#999;stroke-dasharray:4 3}"
    ".weber{fill:none;stroke:#1f4e9c;stroke-width:2}"
    ".intermediate{fill:#f2a93b;fill-opacity:0.4;stroke:#c77800;stroke-width:3}"
    ".core{fill:#c0392b;stroke:#c0392b;stroke-width:2}"
)


def plot_svg(v: Game, *, minimal: bool = True) -> str:
    """Weber set outline, intermediate components and the core of a 3-player game.

    By default only components not contained in another one are drawn.
    """
    if v.n != 3:
        raise ValueError(f"plots need exactly 3 players, got {v.n}")
    s = v[v.grand]
    W = solutions.weber(v)
    M = solutions.intermediate(v)
    if minimal:
        M = solutions.minimal_components(M)
    C = solutions.core(v).vertex_list()
    simplex = [to_plane(p, 1) for p in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
    wpts = [to_plane(p, s) for p in W.points]
    comps = [[to_plane(p, s) for p in c.polytope.vertex_list()] for c in M.nonempty()]
    cpts = [to_plane(p, s) for p in C]
    canvas = _Canvas(simplex + wpts + [p for c in comps for p in c] + cpts)
    body = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
        f"<style>{STYLE}</style>",
        canvas.shape(simplex, "simplex"),
        canvas.shape(wpts, "weber"),
    ]
    body.extend(canvas.shape(c, "intermediate") for c in comps)
    if cpts:
        body.append(canvas.shape(cpts, "core"))
    body.append("</svg>")
    return "\n".join(body) + "\n"


__all__ = ["plot_svg", "to_plane"]
