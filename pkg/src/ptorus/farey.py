"""Farey points, neighbors, triangles, rays, and exact point location.

A Farey point is a primitive integer vector ``(a, b)``; it represents the
slope ``b / a``. Slopes are ``Fraction`` values or :data:`INF`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, gcd, inf
from typing import Tuple, Union

from ._exact import det2, frac

#: The infinite slope. Only ever compared against, never computed with.
INF = inf

Point = Tuple[int, int]
Slope = Union[Fraction, float]


def is_farey_point(p) -> bool:
    a, b = p
    return isinstance(a, int) and isinstance(b, int) and gcd(a, b) == 1


def is_standard(p) -> bool:
    a, b = p
    return is_farey_point(p) and a >= 0 and (a > 0 or b == 1)


def standardize(p) -> Point:
    """The standard Farey point on the line through the nonzero integer point ``p``."""
    a, b = p
    g = gcd(a, b)
    if g == 0:
        raise ValueError("zero vector is not a Farey point")
    a, b = a // g, b // g
    if a < 0 or (a == 0 and b < 0):
        a, b = -a, -b
    return (a, b)


def slope(p) -> Slope:
    a, b = p
    if a == 0:
        return INF
    return Fraction(b, a)


def standard_form(s) -> Point:
    """The standard Farey point ``[a, b]`` with ``b / a == s``."""
    if s == INF or s == -INF:
        return (0, 1)
    s = frac(s)
    return standardize((s.denominator, s.numerator))


def are_farey_neighbors(p, q) -> bool:
    """Weak sign agreement in both coordinates and determinant ``+-1``."""
    (a, b), (c, d) = p, q
    return a * c >= 0 and b * d >= 0 and abs(a * d - b * c) == 1


def farey_neighbor_family(p, n: int) -> Point:
    """The ``n``-th member of an explicit infinite family of neighbors of ``p``."""
    a, b = p
    if not is_standard(p):
        raise ValueError(f"{p} is not a standard Farey point")
    if n < 0 or (a == 1 and n < 1):
        raise ValueError("n out of range for this family")
    if a == 0:
        return (1, n)
    if a == 1:
        return (n, b * n - 1)
    c0 = pow(b, -1, a)
    c = c0 + a * n
    return (c, (b * c - 1) // a)


def is_farey_triangle(p, q, r) -> bool:
    return are_farey_neighbors(p, q) and are_farey_neighbors(q, r) and are_farey_neighbors(p, r)


@dataclass(frozen=True)
class FareyTriangle:
    vertices: Tuple[Point, Point, Point]

    def __post_init__(self):
        p, q, r = self.vertices
        if not is_farey_triangle(p, q, r):
            raise ValueError(f"{self.vertices} is not a Farey triangle")
        if det2((q[0] - p[0], q[1] - p[1]), (r[0] - p[0], r[1] - p[1])) == 0:
            raise AssertionError("pairwise Farey neighbors cannot be collinear")

    @classmethod
    def of(cls, p, q, r) -> "FareyTriangle":
        return cls(tuple(sorted((tuple(p), tuple(q), tuple(r)))))


@dataclass(frozen=True)
class FareyRay:
    """``{c * base : c >= 1}``."""

    base: Point


# Cells of the Farey decomposition of the upper region, by dimension.


@dataclass(frozen=True)
class Vertex:
    point: Point

    @property
    def points(self):
        return (self.point,)


@dataclass(frozen=True)
class Edge:
    ends: Tuple[Point, Point]

    @classmethod
    def of(cls, p, q) -> "Edge":
        return cls(tuple(sorted((tuple(p), tuple(q)))))

    @property
    def points(self):
        return self.ends


@dataclass(frozen=True)
class Triangle:
    triangle: FareyTriangle

    @property
    def points(self):
        return self.triangle.vertices


@dataclass(frozen=True)
class Ray:
    ray: FareyRay

    @property
    def points(self):
        return (self.ray.base,)


FareyCell = Union[Vertex, Edge, Triangle, Ray]


def _apply(m, p) -> Point:
    return (m[0][0] * p[0] + m[0][1] * p[1], m[1][0] * p[0] + m[1][1] * p[1])


def _matmul(m, n):
    return (
        (m[0][0] * n[0][0] + m[0][1] * n[1][0], m[0][0] * n[0][1] + m[0][1] * n[1][1]),
        (m[1][0] * n[0][0] + m[1][1] * n[1][0], m[1][0] * n[0][1] + m[1][1] * n[1][1]),
    )


def _locate_strip(x: Fraction, y: Fraction) -> FareyCell:
    # 0 <= x <= 1, y >= 1
    if x == 0:
        return Vertex((0, 1)) if y == 1 else Ray(FareyRay((0, 1)))
    if x == 1:
        if y.denominator == 1:
            return Vertex((1, int(y)))
        n = floor(y)
        return Edge.of((1, n), (1, n + 1))
    m = (y - 1) / x  # slope seen from the apex [0, 1]
    if m.denominator == 1:
        return Edge.of((0, 1), (1, int(m) + 1))
    n = floor(m) + 1
    return Triangle(FareyTriangle.of((0, 1), (1, n), (1, n + 1)))


def _map_cell(cell: FareyCell, f) -> FareyCell:
    if isinstance(cell, Vertex):
        return Vertex(f(cell.point))
    if isinstance(cell, Edge):
        return Edge.of(*(f(p) for p in cell.ends))
    if isinstance(cell, Ray):
        return Ray(FareyRay(f(cell.ray.base)))
    return Triangle(FareyTriangle.of(*(f(p) for p in cell.triangle.vertices)))


def locate_upper(x, y) -> FareyCell:
    """Minimal Farey cell containing the point ``(x, y)``, which needs ``y >= 1``.

    Points with ``x > 1`` are pulled into the strip ``0 <= x <= 1`` by the
    piecewise-unimodular maps ``(x, y) -> (x - y, y)`` (when ``x >= y``) and
    ``(x, y) -> (y - x, x)`` (when ``x <= y``); negative ``x`` is handled by
    reflection. The cell found in the strip is mapped back.
    """
    x, y = frac(x), frac(y)
    if y < 1:
        raise ValueError("locate_upper needs y >= 1")
    reflect = x < 0
    if reflect:
        x = -x
    m = ((1, 0), (0, 1))  # original point = m @ current point
    while x > 1:
        if x >= y:
            k = ceil(x - 1) if y == 1 else floor(x / y)
            x -= k * y
            m = _matmul(m, ((1, k), (0, 1)))
        else:
            x, y = y - x, x
            m = _matmul(m, ((0, 1), (1, 1)))
    cell = _locate_strip(x, y)

    def back(p):
        a, b = _apply(m, p)
        return (-a, b) if reflect else (a, b)

    return _map_cell(cell, back)


def cell_contains(cell: FareyCell, x, y) -> bool:
    """Independent membership test: ``(x, y)`` lies in the closed cell."""
    from ._exact import solve

    x, y = frac(x), frac(y)
    if isinstance(cell, Vertex):
        return (x, y) == cell.point
    if isinstance(cell, Ray):
        a, b = cell.ray.base
        c = solve([(a, b)], (x, y))
        return c is not None and c[0] >= 1
    pts = cell.points
    # convex combination: affine coordinates with sum 1
    cols = [(p[0], p[1], 1) for p in pts]
    c = solve(cols, (x, y, 1))
    return c is not None and all(t >= 0 for t in c)


def cell_relative_interior(cell: FareyCell, x, y) -> bool:
    """``(x, y)`` lies in the relative interior of ``cell`` (so no proper face contains it)."""
    from ._exact import solve

    x, y = frac(x), frac(y)
    if isinstance(cell, Vertex):
        return (x, y) == cell.point
    if isinstance(cell, Ray):
        a, b = cell.ray.base
        c = solve([(a, b)], (x, y))
        return c is not None and c[0] > 1
    cols = [(p[0], p[1], 1) for p in cell.points]
    c = solve(cols, (x, y, 1))
    return c is not None and all(t > 0 for t in c)
