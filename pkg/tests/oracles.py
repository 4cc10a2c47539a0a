"""Independent reference computations used only by the tests.

None of these route through the code paths they are used to check:
shears at a triangulation come from a lattice change of basis instead of
mutation maps, sector membership from brute-force 2x2 solves, and Farey
cells from scanning candidate triangles.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd

from ptorus._exact import solve
from ptorus.farey import standardize
from ptorus.mutation import sector_generators
from ptorus.surface import Curve, Triangulation, shear_T0

T0_ARCS = ((1, 0), (0, 1), (1, -1))


def lattice_map_from_T0(t: Triangulation):
    """``M`` in GL2(Z) sending the i-th arc of T0 to the i-th arc of ``t`` (up to sign)."""
    p, q, r = t.arcs
    for s1 in (1, -1):
        for s2 in (1, -1):
            m = ((s1 * p[0], s2 * q[0]), (s1 * p[1], s2 * q[1]))
            det = m[0][0] * m[1][1] - m[0][1] * m[1][0]
            image = (m[0][0] - m[0][1], m[1][0] - m[1][1])
            if abs(det) == 1 and standardize(image) == r:
                return m, det
    raise AssertionError(f"no lattice map for {t.arcs}")


def geometric_shear(t: Triangulation, c: Curve) -> tuple:
    """Shear coordinates at ``t`` computed by pulling the curve back to T0.

    A lattice map ``M`` induces a homeomorphism of the punctured torus
    carrying T0 to ``t`` position by position. Orientation-reversing maps
    negate shear coordinates and swap the spiral direction.
    """
    m, det = lattice_map_from_T0(t)
    (a, b), (c_, d) = m
    inv = ((d * det, -b * det), (-c_ * det, a * det))
    x, y = c.point
    pulled = standardize((inv[0][0] * x + inv[0][1] * y, inv[1][0] * x + inv[1][1] * y))
    kind = c.kind
    if det == -1 and kind != "cl":
        kind = "cw" if kind == "ccw" else "ccw"
    v = shear_T0(Curve(kind, pulled))
    return tuple(det * s for s in v)


def brute_sectors(v, span: int = 80) -> frozenset:
    out = set()
    for j in range(-span, span + 1):
        g1, g2 = sector_generators(j)
        c = solve([g1, g2], v)
        if c is not None and all(t >= 0 for t in c):
            out.add(j)
    return frozenset(out)


def primitive_plane_vectors(h: int) -> set:
    out = set()
    for x in range(-h, h + 1):
        for y in range(-h, h + 1):
            z = -x - y
            if abs(z) <= h and (x, y, z) != (0, 0, 0) and gcd(gcd(x, y), z) == 1:
                out.add((x, y, z))
    return out


def random_standard_point(rng: random.Random, h: int):
    while True:
        a, b = rng.randint(-h, h), rng.randint(-h, h)
        if gcd(a, b) == 1:
            return standardize((a, b))


def random_rational(rng: random.Random, bound: int = 100) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
