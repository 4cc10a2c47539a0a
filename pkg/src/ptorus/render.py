"""Stereographic SVG picture of the mutation fan.

Each cone is cut with the unit sphere and the sphere is projected from a
pole onto the tangent plane at the antipode. Floating point is used only
here, on copies of exact generators, and nothing flows back.

Legend (also embedded in the SVG ``<desc>``):

* ``cone3`` filled spherical triangles (orthants and triangle images)
* ``cone2`` arcs (images of Farey rays)
* ``ray`` dots (rational rays in the plane ``x + y + z = 0``)
* ``equator`` the great circle of the plane ``x + y + z = 0``
* text labels ``e1``, ``e2``, ``e3`` at the unit vectors
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .fan import Cone, fan_census

Vec3 = Tuple[float, float, float]

_SQRT3 = math.sqrt(3.0)


@dataclass(frozen=True)
class ProjectionConfig:
    pole: Vec3 = (-1 / _SQRT3, -1 / _SQRT3, -1 / _SQRT3)
    scale: float = 60.0
    max_height: int = 3
    samples: int = 64
    half_width: float = 6.0
    stroke_width: float = 0.8
    label_size: float = 14.0


def _dot(u, v) -> float:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def _unit(v) -> Vec3:
    f = tuple(float(x) for x in v)
    n = math.sqrt(_dot(f, f))
    return (f[0] / n, f[1] / n, f[2] / n)


class _Projector:
    def __init__(self, cfg: ProjectionConfig):
        p = _unit(cfg.pole)
        self.pole = p
        # orthonormal basis of the image plane, built deterministically
        basis = []
        for e in ((1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (0.0, 0.0, 1.0)):
            w = [e[k] - _dot(e, p) * p[k] for k in range(3)]
            for b in basis:
                c = _dot(w, b)
                w = [w[k] - c * b[k] for k in range(3)]
            n = math.sqrt(_dot(w, w))
            if n > 1e-9:
                basis.append(tuple(x / n for x in w))
            if len(basis) == 2:
                break
        self.f1, self.f2 = basis
        self.cfg = cfg

    def __call__(self, v) -> Tuple[float, float]:
        u = _unit(v)
        p = self.pole
        denom = 1.0 - _dot(p, u)
        if denom < 1e-12:
            raise ValueError("cannot project the pole itself")
        t = 2.0 / denom
        x = [p[k] + t * (u[k] - p[k]) for k in range(3)]
        s = self.cfg.scale
        return (s * _dot(x, self.f1), -s * _dot(x, self.f2))


def _arc(g1, g2, n: int) -> List[Vec3]:
    a, b = _unit(g1), _unit(g2)
    return [_unit(tuple((1 - k / n) * a[j] + (k / n) * b[j] for j in range(3))) for k in range(n + 1)]


def _fmt(pt) -> str:
    return f"{pt[0]:.3f},{pt[1]:.3f}"


def _contains(cone: Cone, u: Vec3) -> bool:
    """Float test that ``u`` lies strictly inside a 3-dimensional cone."""
    g = [tuple(float(x) for x in c) for c in cone.generators]
    det = _det(g[0], g[1], g[2])
    coeffs = [
        _det(u, g[1], g[2]) / det,
        _det(g[0], u, g[2]) / det,
        _det(g[0], g[1], u) / det,
    ]
    return all(c > 1e-12 for c in coeffs)


def _det(a, b, c) -> float:
    return (
        a[0] * (b[1] * c[2] - b[2] * c[1])
        - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
    )


def render_fan_svg(cfg: ProjectionConfig = ProjectionConfig(), cones: Sequence[Cone] = None) -> str:
    """SVG document for the cones of :func:`fan_census` at ``cfg.max_height``."""
    if cfg.max_height < 1:
        raise ValueError("max_height must be at least 1")
    if cones is None:
        cones = fan_census(cfg.max_height)
    proj = _Projector(cfg)
    n = cfg.samples
    w = cfg.half_width * cfg.scale
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{2 * w:.0f}" height="{2 * w:.0f}" '
        f'viewBox="{-w:.3f} {-w:.3f} {2 * w:.3f} {2 * w:.3f}">',
        "<desc>Mutation fan, stereographic projection. cone3: filled spherical triangles; "
        "cone2: arcs of 2-dimensional cones; ray: rays in the plane x+y+z=0; "
        "equator: great circle of the plane x+y+z=0.</desc>",
        "<style>"
        f".cone3{{fill:#cfe0f3;fill-opacity:0.5;stroke:#2a4d7a;stroke-width:{cfg.stroke_width}}}"
        f".cone2{{fill:none;stroke:#b03030;stroke-width:{cfg.stroke_width}}}"
        ".ray{fill:#000}"
        f".equator{{fill:none;stroke:#555;stroke-dasharray:4 3;stroke-width:{cfg.stroke_width}}}"
        f".label{{font-family:sans-serif;font-size:{cfg.label_size}px}}"
        "</style>",
    ]
    pole = proj.pole
    for cone in cones:
        if cone.dim != 3:
            continue
        g = cone.generators
        boundary = _arc(g[0], g[1], n)[:-1] + _arc(g[1], g[2], n)[:-1] + _arc(g[2], g[0], n)[:-1]
        d = "M" + " L".join(_fmt(proj(u)) for u in boundary) + " Z"
        if _contains(cone, pole):
            # the projection is the outside of the boundary curve
            d = f"M{-w:.3f},{-w:.3f} L{w:.3f},{-w:.3f} L{w:.3f},{w:.3f} L{-w:.3f},{w:.3f} Z " + d
            out.append(f'<path class="cone3" fill-rule="evenodd" d="{d}"/>')
        else:
            out.append(f'<path class="cone3" d="{d}"/>')
    for cone in cones:
        if cone.dim != 2:
            continue
        pts = " ".join(_fmt(proj(u)) for u in _arc(cone.generators[0], cone.generators[1], n))
        out.append(f'<polyline class="cone2" points="{pts}"/>')
    for cone in cones:
        if cone.dim != 1:
            continue
        x, y = proj(cone.generators[0])
        out.append(f'<circle class="ray" cx="{x:.3f}" cy="{y:.3f}" r="{1.5 * cfg.stroke_width:.3f}"/>')
    eq = [(math.cos(2 * math.pi * k / (4 * n)), math.sin(2 * math.pi * k / (4 * n))) for k in range(4 * n + 1)]
    a, b = _unit((1, -1, 0)), _unit((1, 1, -2))
    circle = [tuple(c * a[j] + s * b[j] for j in range(3)) for c, s in eq]
    out.append(f'<polyline class="equator" points="{" ".join(_fmt(proj(u)) for u in circle)}"/>')
    for k, e in enumerate(((1, 0, 0), (0, 1, 0), (0, 0, 1)), start=1):
        x, y = proj(e)
        out.append(f'<text class="label" x="{x + 4:.3f}" y="{y - 4:.3f}">e{k}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
