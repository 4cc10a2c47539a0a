"""The mutation fan of the once-punctured torus exchange matrix.

Six affine maps ``phi_1 .. phi_6`` carry the Farey decomposition of the
upper region into the planes ``x + y + z = +-1``; coning off gives the
maximal cones. Families 1-3 use Farey cells in ``U = {a >= -1, b >= 1}``,
families 4-6 use the mirror region ``{a >= 1, b >= -1}`` (the image of
``U`` under swapping the two coordinates).

Cones are compared by the set of their primitive generators; the tag
(``kind``, ``family``, ``cell``) records where the cone came from.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, List, Optional, Sequence, Tuple

from . import mutation
from ._exact import cross, cycle2, cycle3, det3, dot, frac, negswap, primitive, rank, solve, vec
from .farey import Edge, FareyCell, Ray, Triangle, Vertex, FareyRay, FareyTriangle, is_farey_triangle, locate_upper
from .surface import Curve, curve_from_shear

Point = Tuple[int, int]

E = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def _phi1(a, b):
    return (1 - b, a + 1, b - a - 1)


def _phi4(a, b):
    return (-1 - b, a - 1, b - a + 1)


def phi(i: int, p: Sequence) -> tuple:
    """The affine map ``phi_i`` applied to the pair ``p``."""
    a, b = p
    if i in (1, 2, 3):
        v = _phi1(a, b)
    elif i in (4, 5, 6):
        v = _phi4(a, b)
    else:
        raise IndexError(f"family {i!r} out of range 1..6")
    shift = (i - 1) % 3
    if shift == 1:
        v = cycle2(v)
    elif shift == 2:
        v = cycle3(v)
    return v


def phi_inverse(i: int, v: Sequence) -> tuple:
    """Inverse of ``phi_i`` on its target plane (sum ``+1`` for i <= 3, ``-1`` otherwise)."""
    if i not in range(1, 7):
        raise IndexError(f"family {i!r} out of range 1..6")
    target = 1 if i <= 3 else -1
    if sum(v) != target:
        raise ValueError(f"phi_{i} lands in the plane x + y + z = {target}")
    shift = (i - 1) % 3
    # undo the cyclic shift to get back to phi_1 / phi_4 coordinates
    if shift == 1:
        v = cycle3(v)
    elif shift == 2:
        v = cycle2(v)
    x, y, _ = v
    if i <= 3:
        return (y - 1, 1 - x)
    return (y + 1, -1 - x)


def _linear(i: int, p: Sequence) -> tuple:
    """Direction ``lim (1/c) phi_i(c p)``."""
    z = phi(i, (0, 0))
    return tuple(s - t for s, t in zip(phi(i, p), z))


def _in_ray_region(i: int, p: Point) -> bool:
    a, b = p
    if i > 3:
        a, b = b, a
    return a >= 0 and b >= 1


def ray_image_generators(i: int, r) -> Tuple[tuple, tuple]:
    """``phi_i(vertex)`` and the asymptotic direction of the ray's image."""
    p = r.base if isinstance(r, FareyRay) else tuple(r)
    if not _in_ray_region(i, p):
        raise ValueError(f"ray vertex {p} is not admissible for family {i}")
    return phi(i, p), _linear(i, p)


# -- cones ------------------------------------------------------------------

CONE_KINDS = (
    "zero",
    "positive_orthant",
    "negative_orthant",
    "orthant_face",
    "triangle",
    "ray",
    "edge",
    "vertex",
    "plane_ray",
)


@dataclass(frozen=True, eq=False)
class Cone:
    """A simplicial cone with integer generators.

    ``kind`` is one of :data:`CONE_KINDS`; ``triangle``, ``ray``, ``edge`` and
    ``vertex`` cones are images of the Farey cell ``cell`` under family
    ``family``.
    """

    kind: str
    generators: Tuple[tuple, ...]
    family: Optional[int] = None
    cell: Optional[FareyCell] = None

    @property
    def dim(self) -> int:
        return len(self.generators)

    @property
    def key(self) -> frozenset:
        return frozenset(primitive(g) for g in self.generators)

    def __eq__(self, other):
        return isinstance(other, Cone) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def describe(self) -> str:
        if self.family is None:
            return self.kind
        pts = ";".join(f"[{a},{b}]" for a, b in self.cell.points)
        return f"{self.kind}(family={self.family}, {pts})"


ZERO_CONE = Cone("zero", ())
POSITIVE_ORTHANT = Cone("positive_orthant", E)
NEGATIVE_ORTHANT = Cone("negative_orthant", tuple(tuple(-x for x in e) for e in E))

_CELL_KIND = {Vertex: "vertex", Edge: "edge", Triangle: "triangle", Ray: "ray"}


def image_cone(i: int, cell: FareyCell) -> Cone:
    """``Phi_i`` of a Farey cell (given in family-``i`` coordinates)."""
    gens = [phi(i, p) for p in cell.points]
    if isinstance(cell, Ray):
        gens.append(_linear(i, cell.ray.base))
    return Cone(_CELL_KIND[type(cell)], tuple(gens), i, cell)


def _swap_cell(cell: FareyCell) -> FareyCell:
    def sw(p):
        return (p[1], p[0])

    if isinstance(cell, Vertex):
        return Vertex(sw(cell.point))
    if isinstance(cell, Edge):
        return Edge.of(*(sw(p) for p in cell.ends))
    if isinstance(cell, Ray):
        return Ray(FareyRay(sw(cell.ray.base)))
    return Triangle(FareyTriangle.of(*(sw(p) for p in cell.triangle.vertices)))


def _family_on_positive_plane(w) -> int:
    x, y, z = w
    if x <= 0 and y >= 0:
        return 1
    if x >= 0 and z <= 0:
        return 2
    if y <= 0 and z >= 0:
        return 3
    raise AssertionError(f"{w} matches no family pattern")


# counterclockwise family j on the +1 plane mirrors to clockwise family
_MIRROR = {1: 4, 2: 6, 3: 5}


def locate_in_fan(v: Sequence) -> Cone:
    """The minimal cone of the fan containing ``v``."""
    v = vec(v)
    if len(v) != 3:
        raise ValueError("expected a vector of length 3")
    if not any(v):
        return ZERO_CONE
    s = sum(v)
    if s == 0:
        return Cone("plane_ray", (primitive(v),))
    w = tuple(frac(x) / abs(s) for x in v)
    u = w if s > 0 else negswap(w)
    if all(x >= 0 for x in u):
        if s > 0:
            if all(x > 0 for x in w):
                return POSITIVE_ORTHANT
            return Cone("orthant_face", tuple(E[k] for k in range(3) if w[k] > 0))
        if all(x < 0 for x in w):
            return NEGATIVE_ORTHANT
        return Cone("orthant_face", tuple(tuple(-t for t in E[k]) for k in range(3) if w[k] < 0))
    j = _family_on_positive_plane(u)
    cell = locate_upper(*phi_inverse(j, u))
    if s > 0:
        return image_cone(j, cell)
    return image_cone(_MIRROR[j], _swap_cell(cell))


def cone_coefficients(cone: Cone, v: Sequence) -> Optional[tuple]:
    """Coordinates of ``v`` in the cone's generators, or ``None`` outside the span."""
    v = vec(v)
    if cone.dim == 0:
        return () if not any(v) else None
    return solve(cone.generators, v)


def cone_membership(cone: Cone, v: Sequence) -> bool:
    c = cone_coefficients(cone, v)
    return c is not None and all(t >= 0 for t in c)


def in_relative_interior(cone: Cone, v: Sequence) -> bool:
    c = cone_coefficients(cone, v)
    return c is not None and all(t > 0 for t in c)


# -- positive basis -----------------------------------------------------------


@dataclass(frozen=True)
class BasisElement:
    """A coefficient row together with the curve whose shear vector it is.

    ``item`` says which kind of row this is: 1 (counterclockwise spirals),
    2 (clockwise spirals) or 3 (primitive vectors in ``x + y + z = 0``).
    """

    vector: tuple
    provenance: Curve
    ring: str = "Z"

    @property
    def item(self) -> int:
        return {"ccw": 1, "cw": 2, "cl": 3}[self.provenance.kind]


def basis_element(g: Sequence, ring: str = "Z") -> BasisElement:
    g = tuple(int(x) for x in vec(g))
    return BasisElement(g, curve_from_shear(g), ring)


def basis_expand(v: Sequence) -> Tuple[Cone, List[Tuple[BasisElement, object]]]:
    """Expand ``v`` in the basis rows spanning its minimal cone.

    Returns the cone and the list of ``(element, coefficient)`` pairs; every
    coefficient is positive, and integral when ``v`` is.
    """
    cone = locate_in_fan(v)
    coeffs = cone_coefficients(cone, v)
    if coeffs is None or any(c <= 0 for c in coeffs):
        raise AssertionError(f"{v} is not in the relative interior of its located cone")
    return cone, [(basis_element(g), c) for g, c in zip(cone.generators, coeffs)]


def expansion_residual_relation(v: Sequence, terms) -> list:
    """The relation ``v - sum c_i b_i`` as ``(vector, coefficient)`` pairs."""
    return [(vec(v), 1)] + [(t.vector, -c) for t, c in terms]


# -- enumeration --------------------------------------------------------------

RINGS = ("Z", "Q", "R")


def _standard_points(max_height: int, a_min: int, b_min: int) -> Iterable[Point]:
    from math import gcd

    for a in range(a_min, max_height + 1):
        for b in range(b_min, max_height + 1):
            if gcd(a, b) == 1 and (a > 0 or b == 1):
                yield (a, b)


def _cycles(v):
    return [tuple(v), cycle2(v), cycle3(v)]


def plane_vectors(max_height: int) -> List[tuple]:
    """Primitive integer vectors with coordinate sum zero and entries in ``[-H, H]``."""
    from math import gcd

    out = []
    r = range(-max_height, max_height + 1)
    for x in r:
        for y in r:
            z = -x - y
            if abs(z) <= max_height and gcd(gcd(x, y), z) == 1:
                out.append((x, y, z))
    return out


def enumerate_universal_coeffs(max_height: int, ring: str = "Z") -> List[BasisElement]:
    """Coefficient rows of a universal extended exchange matrix, heights up to ``max_height``.

    Rows indexed by slopes use standard forms ``b/a`` with ``|a|, |b| <= max_height``;
    plane rows have entries in ``[-max_height, max_height]``. Over ``R`` the plane
    rows are the primitive representatives of the rational rays in range; an
    irrational ray is represented by :func:`ptorus.surface.normalized_direction`.
    """
    if max_height < 1:
        raise ValueError("max_height must be at least 1")
    if ring not in RINGS:
        raise ValueError(f"ring must be one of {RINGS}")
    rows = {}
    for a, b in _standard_points(max_height, 0, 1):  # positive or infinite slopes
        for g in _cycles(_phi1(a, b)):
            rows.setdefault(g, BasisElement(g, curve_from_shear(g), ring))
    for a, b in _standard_points(max_height, 1, 0):  # finite nonnegative slopes
        for g in _cycles(_phi4(a, b)):
            rows.setdefault(g, BasisElement(g, curve_from_shear(g), ring))
    for g in plane_vectors(max_height):
        rows.setdefault(g, BasisElement(g, curve_from_shear(g), ring))
    return list(rows.values())


def g_vectors(max_height: int) -> List[Tuple[object, tuple]]:
    """``(slope, g-vector)`` for cluster variables of the transpose, all three cycles per slope."""
    from .farey import INF

    if max_height < 1:
        raise ValueError("max_height must be at least 1")
    out = []
    for a, b in _standard_points(max_height, 0, 1):
        s = INF if a == 0 else Fraction(b, a)
        for g in _cycles(_phi1(a, b)):
            out.append((s, g))
    return out


# -- rescaling ------------------------------------------------------------------


@dataclass(frozen=True)
class RescaleMap:
    """Positive diagonal ``diag(s1, s2, s3)``."""

    scales: Tuple[Fraction, Fraction, Fraction]

    def __post_init__(self):
        s = tuple(frac(x) for x in self.scales)
        if len(s) != 3 or any(x <= 0 for x in s):
            raise ValueError("rescaling needs three positive entries")
        object.__setattr__(self, "scales", s)

    def exchange_matrix(self, b: Sequence[Sequence] = mutation.B) -> tuple:
        """``diag^-1 B diag``; raises ``ValueError`` unless it is an integer matrix."""
        s = self.scales
        out = []
        for i in range(3):
            row = []
            for j in range(3):
                x = b[i][j] * s[j] / s[i]
                if x.denominator != 1:
                    raise ValueError(f"rescaled exchange matrix has non-integer entry {x}")
                row.append(int(x))
            out.append(tuple(row))
        return tuple(out)

    def apply(self, v: Sequence) -> tuple:
        return vec(x * s for x, s in zip(v, self.scales))


def rescale_cones(m: RescaleMap, cones: Iterable[Cone]) -> List[Cone]:
    m.exchange_matrix()
    return [Cone(c.kind, tuple(m.apply(g) for g in c.generators), c.family, c.cell) for c in cones]


# -- census -----------------------------------------------------------------------


def census_height(p: Point) -> int:
    """Height of a point of ``U``: ``max(|a|, b - 1)``, so [0, 1] sits at height 0."""
    a, b = p
    return max(abs(a), b - 1)


def _u_triangles(max_height: int) -> List[FareyTriangle]:
    from math import gcd

    pts = [
        (a, b)
        for a in range(-1, max_height + 1)
        for b in range(1, max_height + 2)
        if gcd(a, b) == 1 and census_height((a, b)) <= max_height
    ]
    ptset = set(pts)
    tris = set()
    for p, q in combinations(pts, 2):
        if abs(p[0] * q[1] - p[1] * q[0]) != 1:
            continue
        for r in ((p[0] + q[0], p[1] + q[1]), (p[0] - q[0], p[1] - q[1]), (q[0] - p[0], q[1] - p[1])):
            if r in ptset and is_farey_triangle(p, q, r):
                tris.add(tuple(sorted((p, q, r))))
    return [FareyTriangle(t) for t in sorted(tris)]


def _u_ray_vertices(max_height: int) -> List[Point]:
    return [p for p in _standard_points(max_height + 1, 0, 1) if census_height(p) <= max_height]


def fan_census(max_height: int) -> List[Cone]:
    """All cones with Farey data of height at most ``max_height``.

    Contains the two orthants, the triangle images of every family, the
    ray images, and the plane rays bounding those ray images.
    """
    if max_height < 1:
        raise ValueError("max_height must be at least 1")
    cones = [POSITIVE_ORTHANT, NEGATIVE_ORTHANT]
    tris = _u_triangles(max_height)
    rays = _u_ray_vertices(max_height)
    for i in range(1, 7):
        for t in tris:
            cell = Triangle(t)
            cones.append(image_cone(i, cell if i <= 3 else _swap_cell(cell)))
    plane = {}
    for i in range(1, 7):
        for p in rays:
            cell = Ray(FareyRay(p))
            c = image_cone(i, cell if i <= 3 else _swap_cell(cell))
            cones.append(c)
            d = primitive(c.generators[1])
            plane.setdefault(d, Cone("plane_ray", (d,)))
    cones.extend(plane[d] for d in sorted(plane))
    return cones


# -- exact intersection of simplicial cones ---------------------------------------


def _h_representation(cone: Cone):
    """Rows ``h`` with ``h . v >= 0`` and rows with ``h . v == 0`` cutting out the cone."""
    cols = [tuple(frac(x) for x in g) for g in cone.generators]
    for e in E:
        if len(cols) == 3:
            break
        if rank(cols + [e]) == len(cols) + 1:
            cols.append(e)
    # rows of the inverse of the column matrix; sols[e][k] = (M^-1)[k][e]
    sols = [solve(cols, e) for e in E]
    inv_rows = [tuple(sols[e][k] for e in range(3)) for k in range(3)]
    k = cone.dim
    return inv_rows[:k], inv_rows[k:]


def intersection_extreme_rays(c1: Cone, c2: Cone) -> set:
    """Primitive extreme rays of ``c1 & c2`` (both cones pointed)."""
    ineq1, eq1 = _h_representation(c1)
    ineq2, eq2 = _h_representation(c2)
    ineq = ineq1 + ineq2
    eqs = eq1 + eq2
    rows = ineq + eqs

    def feasible(d):
        return all(dot(h, d) >= 0 for h in ineq) and all(dot(h, d) == 0 for h in eqs)

    rays = set()
    for r1, r2 in combinations(rows, 2):
        d = cross(r1, r2)
        if not any(d):
            continue
        for cand in (d, tuple(-x for x in d)):
            if feasible(cand):
                active = [h for h in rows if dot(h, cand) == 0]
                if rank(active) == 2:
                    rays.add(primitive(cand))
    return rays


def intersect_is_common_face(c1: Cone, c2: Cone) -> bool:
    """Whether ``c1 & c2`` is the cone over the generators the two cones share."""
    common = c1.key & c2.key
    return intersection_extreme_rays(c1, c2) == set(common)


def generator_determinant(cone: Cone):
    if cone.dim != 3:
        raise ValueError("determinant needs a full-dimensional cone")
    return det3(cone.generators)


# -- sanity sweep -----------------------------------------------------------------


@dataclass
class SanityReport:
    samples: int = 0
    located: int = 0
    location_failures: List[tuple] = field(default_factory=list)
    pairs: int = 0
    pair_failures: List[Tuple[Cone, Cone]] = field(default_factory=list)
    unimodular_checked: int = 0
    unimodular_failures: List[Cone] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.location_failures or self.pair_failures or self.unimodular_failures)


def random_rational_vector(rng: random.Random, bound: int = 100) -> tuple:
    return tuple(Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(3))


def fan_sanity(samples: int = 1000, max_height: int = 4, pairs: Optional[int] = None, seed: int = 0) -> SanityReport:
    """Completeness, simpliciality, face-intersection and unimodularity checks on random samples."""
    rng = random.Random(seed)
    rep = SanityReport()
    for _ in range(samples):
        v = random_rational_vector(rng)
        rep.samples += 1
        cone = locate_in_fan(v)
        gens = list(cone.generators)
        if rank(gens) != len(gens) or not in_relative_interior(cone, v):
            rep.location_failures.append(v)
        else:
            rep.located += 1
    census = fan_census(max_height)
    maximal = [c for c in census if c.dim == 3 or c.kind == "ray"]
    for c in census:
        if c.dim == 3:
            rep.unimodular_checked += 1
            if abs(generator_determinant(c)) != 1:
                rep.unimodular_failures.append(c)
    n_pairs = samples if pairs is None else pairs
    for _ in range(n_pairs):
        c1, c2 = rng.sample(maximal, 2)
        rep.pairs += 1
        if not intersect_is_common_face(c1, c2):
            rep.pair_failures.append((c1, c2))
    return rep
