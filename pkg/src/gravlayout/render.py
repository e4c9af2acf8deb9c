"""SVG output: vertices as circles, straight or circular-arc edges, and a
blue-to-red color spectrum for centrality."""

from __future__ import annotations

import math
from dataclasses import dataclass
from xml.sax.saxutils import escape

import numpy as np

from .arcs import ArcEdge
from .graphs import Graph

TWO_PI = 2.0 * math.pi


class RenderError(ValueError):
    """Raised when a drawing cannot be serialized."""


@dataclass(frozen=True)
class Color:
    r: int
    g: int
    b: int

    def __post_init__(self) -> None:
        for component in (self.r, self.g, self.b):
            if not 0 <= component <= 255:
                raise ValueError(f"color component {component} out of range")

    @property
    def css(self) -> str:
        return f"#{self.r:02x}{self.g:02x}{self.b:02x}"


def color_for(value: float, lo: float, hi: float) -> Color:
    """Linear blue-to-red spectrum: blue at lo, red at hi, clamped outside."""
    if lo > hi:
        raise ValueError("lo must not exceed hi")
    if lo == hi:
        return Color(255, 0, 0)
    t = (value - lo) / (hi - lo)
    t = min(1.0, max(0.0, t))
    # round half up so the midpoint lands on (128, 0, 128)
    r = int(math.floor(255.0 * t + 0.5))
    b = int(math.floor(255.0 * (1.0 - t) + 0.5))
    return Color(r, 0, b)


def _fmt(x: float) -> str:
    return f"{x:.3f}"


def _arc_path(arc: ArcEdge) -> str:
    geom = arc.geometry
    assert geom is not None
    cx, cy = geom.center
    ux, uy = arc.p_u
    vx, vy = arc.p_v
    theta_u = math.atan2(uy - cy, ux - cx)
    theta_v = math.atan2(vy - cy, vx - cx)
    if geom.ccw:
        sweep = (theta_v - theta_u) % TWO_PI
        sweep_flag = 1
    else:
        sweep = (theta_u - theta_v) % TWO_PI
        sweep_flag = 0
    large_flag = 1 if sweep > math.pi else 0
    r = _fmt(geom.radius)
    return (
        f"M {_fmt(ux)} {_fmt(uy)} "
        f"A {r} {r} 0 {large_flag} {sweep_flag} {_fmt(vx)} {_fmt(vy)}"
    )


def render_svg(
    g: Graph,
    positions,
    colors: list[Color] | None = None,
    arcs: list[ArcEdge] | None = None,
    *,
    k: float = 80.0,
    vertex_radius: float | None = None,
    edge_width: float | None = None,
    edge_color: str = "#444444",
    show_labels: bool = False,
) -> str:
    """Serialize a drawing to a standalone SVG document.

    Edges are drawn first (lines, or circular-arc paths when arcs are
    given), vertices on top as filled circles. The drawing keeps y-up
    mathematical orientation via a flip transform, and the viewBox is the
    drawing's bounding box padded by 0.1 * k.
    """
    pos = np.asarray(positions, dtype=float).reshape(g.vertex_count, 2)
    for v in range(g.vertex_count):
        if not np.all(np.isfinite(pos[v])):
            raise RenderError(f"non-finite coordinate for vertex {g.label_of(v)}")
    radius = 0.05 * k if vertex_radius is None else vertex_radius
    width = 0.01 * k if edge_width is None else edge_width
    pad = 0.1 * k

    points = [pos] if g.vertex_count else []
    if arcs:
        points.append(np.asarray([a.control for a in arcs], dtype=float))
    if points:
        allpts = np.vstack(points)
        xmin, ymin = allpts.min(axis=0)
        xmax, ymax = allpts.max(axis=0)
    else:
        xmin = ymin = 0.0
        xmax = ymax = 0.0

    vb_x = xmin - pad
    vb_y = -(ymax + pad)
    vb_w = (xmax - xmin) + 2 * pad
    vb_h = (ymax - ymin) + 2 * pad

    arc_by_edge = {a.edge: a for a in arcs} if arcs else {}
    body: list[str] = []
    for u, v in g.edges:
        arc = arc_by_edge.get((u, v))
        if arc is not None and not arc.straight:
            body.append(
                f'<path d="{_arc_path(arc)}" fill="none" '
                f'stroke="{edge_color}" stroke-width="{_fmt(width)}"/>'
            )
        else:
            body.append(
                f'<line x1="{_fmt(pos[u, 0])}" y1="{_fmt(pos[u, 1])}" '
                f'x2="{_fmt(pos[v, 0])}" y2="{_fmt(pos[v, 1])}" '
                f'stroke="{edge_color}" stroke-width="{_fmt(width)}"/>'
            )
    for v in range(g.vertex_count):
        fill = colors[v].css if colors is not None else "#5b7db1"
        body.append(
            f'<circle cx="{_fmt(pos[v, 0])}" cy="{_fmt(pos[v, 1])}" '
            f'r="{_fmt(radius)}" fill="{fill}"/>'
        )
    if show_labels:
        for v in range(g.vertex_count):
            # counter-flip each label so text is not mirrored by the group transform
            body.append(
                f'<text transform="translate({_fmt(pos[v, 0] + 1.2 * radius)} '
                f'{_fmt(pos[v, 1])}) scale(1,-1)" font-size="{_fmt(1.5 * radius)}" '
                f'fill="#222222">{escape(g.label_of(v))}</text>'
            )

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{_fmt(vb_x)} {_fmt(vb_y)} {_fmt(vb_w)} {_fmt(vb_h)}">',
        '<g transform="scale(1,-1)">',
        *body,
        "</g>",
        "</svg>",
    ]
    return "\n".join(lines) + "\n"
