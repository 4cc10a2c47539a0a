"""Arcs, allowable curves, triangulations, and shear coordinates.

Arcs and curves in the once-punctured torus are indexed by standard Farey
points ``(a, b)``. The base triangulation ``T0`` consists of the arcs of
slopes ``0``, ``inf`` and ``-1`` at positions 1, 2, 3. Shear coordinates
with respect to any other triangulation are obtained by transporting the
``T0`` coordinates along a flip path with mutation maps.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import floor, gcd
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from . import mutation
from ._exact import add, cycle2, cycle3, det2, frac, negswap, scale
from .farey import INF, are_farey_neighbors, is_standard, slope, standard_form, standardize

Point = Tuple[int, int]

# -- curves ----------------------------------------------------------------

CURVE_KINDS = ("cl", "cw", "ccw")


@dataclass(frozen=True)
class Curve:
    """An allowable curve: closed (``cl``) or spiralling (``cw`` / ``ccw``)."""

    kind: str
    point: Point

    def __post_init__(self):
        if self.kind not in CURVE_KINDS:
            raise ValueError(f"unknown curve kind {self.kind!r}")
        if not is_standard(self.point):
            raise ValueError(f"{self.point} is not a standard Farey point")

    @property
    def slope(self):
        return slope(self.point)

    def __str__(self) -> str:
        a, b = self.point
        return f"{self.kind}:{a}/{b}"


@dataclass(frozen=True)
class ProjectedLine:
    """Projection of a line of slope ``slope`` that avoids the lattice.

    Irrational slopes are represented by an exact rational surrogate; for a
    genuinely rational slope the curve is the closed curve of that slope.
    """

    slope: Union[Fraction, float]

    def as_closed(self) -> Curve:
        return Curve("cl", standard_form(self.slope))

    def __str__(self) -> str:
        return "line:inf" if self.slope == INF else f"line:{frac(self.slope)}"


def cl(a: int, b: int) -> Curve:
    return Curve("cl", standardize((a, b)))


def cw(a: int, b: int) -> Curve:
    return Curve("cw", standardize((a, b)))


def ccw(a: int, b: int) -> Curve:
    return Curve("ccw", standardize((a, b)))


def line(s) -> ProjectedLine:
    return ProjectedLine(INF if s == INF else frac(s))


def parse_curve(text: str) -> Union[Curve, ProjectedLine]:
    """Parse ``cl:a/b``, ``cw:a/b``, ``ccw:a/b``, ``line:p/q`` or ``<kind>:inf``.

    For ``cl``/``cw``/``ccw`` the pair ``a/b`` is the Farey point ``[a, b]``
    (slope ``b / a``); ``inf`` stands for ``[0, 1]``. For ``line`` the text
    after the colon is the slope itself.
    """
    kind, sep, rest = text.strip().partition(":")
    if not sep:
        raise ValueError(f"malformed curve literal {text!r}")
    rest = rest.strip()
    if kind == "line":
        if rest in ("inf", "oo", "infinity"):
            return line(INF)
        try:
            return line(Fraction(rest))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"malformed slope in {text!r}") from exc
    if kind not in CURVE_KINDS:
        raise ValueError(f"unknown curve kind in {text!r}")
    if rest in ("inf", "oo", "infinity"):
        return Curve(kind, (0, 1))
    num, sep, den = rest.partition("/")
    try:
        a, b = int(num), int(den)
    except ValueError as exc:
        raise ValueError(f"malformed Farey point in {text!r}") from exc
    if not sep:
        raise ValueError(f"malformed Farey point in {text!r}")
    if gcd(a, b) != 1:
        raise ValueError(f"{a}/{b} is not a primitive integer point")
    return Curve(kind, standardize((a, b)))


def _as_allowable(c) -> Curve:
    if isinstance(c, ProjectedLine):
        return c.as_closed()
    return c


# -- compatibility ---------------------------------------------------------


def arcs_compatible(p: Point, q: Point) -> bool:
    """Distinct arcs are compatible iff, ordered by slope, ``ad - bc == 1``."""
    p, q = standardize(p), standardize(q)
    if p == q:
        raise ValueError("arcs are equal; compatibility of an arc with itself is vacuous")
    if slope(p) > slope(q):
        p, q = q, p
    (a, b), (c, d) = p, q
    return a * d - b * c == 1


def curves_compatible(c1, c2) -> bool:
    for c in (c1, c2):
        if isinstance(c, ProjectedLine):
            raise ValueError("compatibility is only defined for allowable curves")
    if c1 == c2:
        return True
    kinds = {c1.kind, c2.kind}
    if "cl" in kinds:
        return len(kinds) == 2 and c1.point == c2.point
    if c1.kind != c2.kind:
        return False
    (a, b), (c, d) = c1.point, c2.point
    return abs(a * d - b * c) == 1


# -- shear coordinates with respect to T0 -----------------------------------


def _ccw_region1(a, b):
    return (1 - b, a + 1, b - a - 1)


def _cl_region1(a, b):
    return (-b, a, b - a)


def shear_T0(c) -> tuple:
    """Shear coordinates of an allowable curve with respect to ``T0``."""
    c = _as_allowable(c)
    if c.kind == "cw":
        a, b = c.point
        return negswap(shear_T0(Curve("ccw", standardize((b, a)))))
    base = _ccw_region1 if c.kind == "ccw" else _cl_region1
    a, b = c.point
    if b > 0:
        return base(a, b)
    if -a < b:
        return cycle2(base(-b, a + b))
    return cycle3(base(-a - b, a))


_PAIR_SHEAR = {
    "rr": (0, 1, -1),
    "rt": (-1, 0, 0),
    "tr": (0, 1, 0),
    "tt": (-1, 0, 1),
}


def curve_word(c) -> str:
    """The ``r``/``t`` word of a ``ccw`` or ``cl`` curve of nonnegative-or-infinite slope.

    ``r`` records crossing a vertical lattice line (leaving a unit square
    to the right) and ``t`` a horizontal one (leaving through the top).
    """
    c = _as_allowable(c)
    a, b = c.point
    if not (a >= 0 and b > 0) or c.kind == "cw":
        raise ValueError("word oracle only covers ccw/cl curves with a >= 0, b > 0")
    if c.kind == "ccw":
        if a == 0:
            return "tr"
        # segment (0,0) -> (a,b); crossing parameters scaled by a*b
        events = [(i * b, "r") for i in range(1, a)] + [(j * a, "t") for j in range(1, b)]
        events.sort()
        return "tr" + "".join(ch for _, ch in events) + "r"
    # closed: segment (x0, 0) -> (x0 + a, b) with x0 = 1 / (2(a + b));
    # parameters scaled by 2ab(a + b)
    s = 2 * (a + b)
    events = [(b * (k * s - 1), "r") for k in range(1, a + 1)] + [(a * s * j, "t") for j in range(1, b)]
    events.sort()
    return "t" + "".join(ch for _, ch in events) + "t"


def word_shear(word: str) -> tuple:
    total = (0, 0, 0)
    for i in range(len(word) - 1):
        total = add(total, _PAIR_SHEAR[word[i : i + 2]])
    return total


def shear_word_oracle(c) -> tuple:
    """Shear coordinates from consecutive letter pairs of the curve's word."""
    return word_shear(curve_word(c))


def _phi1_inv(v):
    x, y, _ = v
    return (y - 1, 1 - x)


def _lin_inv(v):
    x, y, _ = v
    return (y, -x)


def curve_from_shear(v: Sequence) -> Curve:
    """The allowable curve whose ``T0`` shear coordinates are ``v``.

    Raises ``ValueError`` when ``v`` is not such a vector.
    """
    v = tuple(v)
    if not all(isinstance(t, int) or frac(t).denominator == 1 for t in v):
        raise ValueError(f"{v} is not an integer vector")
    v = tuple(int(t) for t in v)
    total = sum(v)
    if total == -1:
        c = curve_from_shear(negswap(v))
        a, b = c.point
        return Curve("cw", standardize((b, a)))
    if total == 1:
        kind, inv = "ccw", _phi1_inv
    elif total == 0:
        kind, inv = "cl", _lin_inv
    else:
        raise ValueError(f"{v} is not the shear vector of an allowable curve")
    q1 = inv(v)
    q2 = inv(cycle3(v))
    q3 = inv(cycle2(v))
    candidates = (q1, (q2[0] + q2[1], -q2[0]), (q3[1], -q3[0] - q3[1]))
    for p in candidates:
        if is_standard(p):
            curve = Curve(kind, p)
            if shear_T0(curve) == v:
                return curve
    raise ValueError(f"{v} is not the shear vector of an allowable curve")


# -- triangulations ----------------------------------------------------------

T0_ARCS: Tuple[Point, Point, Point] = ((1, 0), (0, 1), (1, -1))


@dataclass(frozen=True, eq=False)
class Triangulation:
    """Ordered arc triple reached from ``T0`` by the flips in ``path``.

    Equality and hashing use the arcs only, not the path.
    """

    arcs: Tuple[Point, Point, Point]
    path: Tuple[int, ...] = field(default=())

    @property
    def parity(self) -> int:
        return len(self.path) % 2

    @property
    def exchange_matrix(self) -> tuple:
        return mutation.B if self.parity == 0 else mutation.NEG_B

    def __eq__(self, other):
        return isinstance(other, Triangulation) and self.arcs == other.arcs

    def __hash__(self):
        return hash(self.arcs)

    def slopes(self):
        return tuple(slope(p) for p in self.arcs)


T0 = Triangulation(T0_ARCS, ())


def flip(t: Triangulation, i: int) -> Triangulation:
    """Replace the arc at position ``i`` by the other diagonal of its quadrilateral."""
    if i not in (1, 2, 3):
        raise IndexError(f"flip position {i!r} out of range 1..3")
    current = t.arcs[i - 1]
    p, q = (t.arcs[j] for j in range(3) if j != i - 1)
    cands = {standardize(add(p, q)), standardize((p[0] - q[0], p[1] - q[1]))}
    cands.discard(current)
    if len(cands) != 1:
        raise AssertionError(f"arc {current} is not a diagonal of {p}, {q}")
    new = cands.pop()
    arcs = list(t.arcs)
    arcs[i - 1] = new
    for x, y in ((0, 1), (0, 2), (1, 2)):
        if not arcs_compatible(arcs[x], arcs[y]):
            raise AssertionError(f"flip produced incompatible arcs {arcs}")
    return Triangulation(tuple(arcs), t.path + (i,))


def follow(path: Iterable[int], start: Triangulation = T0) -> Triangulation:
    t = start
    for i in path:
        t = flip(t, i)
    return t


def signed_adjacency(t: Triangulation) -> tuple:
    """Signed adjacency matrix read off from the geometry of the lifted triangles.

    Orient the arcs as ``p, s q, s' r`` summing to zero; both triangles of
    the torus then list the arcs in the same cyclic order, and the sign of
    ``det(p, s q)`` decides whether that order is clockwise.
    """
    p, q, r = t.arcs
    for sq in (1, -1):
        for sr in (1, -1):
            if all(p[j] + sq * q[j] + sr * r[j] == 0 for j in range(2)):
                orient = det2(p, (sq * q[0], sq * q[1]))
                return mutation.B if orient < 0 else mutation.NEG_B
    raise AssertionError(f"{t.arcs} do not form a triangle")


def transport(t: Triangulation, v: Sequence) -> tuple:
    """Push a ``T0`` shear vector along the flip path of ``t``."""
    return mutation.mutation_map(mutation.B, t.path, v)


def shear_wrt(t: Triangulation, c) -> tuple:
    return transport(t, shear_T0(c))


def triangulation_from_arcs(arcs: Iterable[Point]) -> Triangulation:
    """A triangulation (with flip path from ``T0``) having the given three arcs."""
    target = {standardize(p) for p in arcs}
    if len(target) != 3:
        raise ValueError("need three distinct arcs")
    pts = sorted(target)
    for x, y in ((0, 1), (0, 2), (1, 2)):
        if not arcs_compatible(pts[x], pts[y]):
            raise ValueError(f"arcs {pts[x]} and {pts[y]} are not compatible")
    base = set(T0_ARCS)
    cur = set(target)
    steps = []  # (arc removed, arc inserted) going towards T0
    while cur != base:
        if len(steps) > 10_000:
            raise AssertionError("reduction to T0 did not terminate")
        r = max(cur, key=lambda p: (abs(p[0]) + abs(p[1]), p not in base, p))
        p, q = sorted(cur - {r})
        cands = {standardize(add(p, q)), standardize((p[0] - q[0], p[1] - q[1]))} - {r}
        new = cands.pop()
        steps.append((r, new))
        cur = (cur - {r}) | {new}
    t = T0
    for old, new in reversed(steps):
        t = flip(t, t.arcs.index(new) + 1)
        assert t.arcs[t.path[-1] - 1] == old
    return t


# -- tangles ------------------------------------------------------------------

Tangle = Dict[object, object]


def _items(tangle) -> List[tuple]:
    if isinstance(tangle, dict):
        return list(tangle.items())
    return list(tangle)


def tangle_shear(tangle, t: Triangulation = T0) -> tuple:
    """Weighted sum of the shear coordinates of the tangle's curves at ``t``."""
    total = (0, 0, 0)
    for curve, w in _items(tangle):
        total = add(total, scale(frac(w), shear_wrt(t, curve)))
    return tuple(x.numerator if isinstance(x, Fraction) and x.denominator == 1 else x for x in total)


@dataclass(frozen=True)
class FalsifyResult:
    """Outcome of a bounded search for a triangulation with nonzero tangle shear."""

    witness: Optional[Triangulation]
    shear: Optional[tuple]
    max_depth: int
    explored: int

    @property
    def exhausted(self) -> bool:
        return self.witness is None

    @property
    def depth(self) -> Optional[int]:
        return None if self.witness is None else len(self.witness.path)


def falsify_null_tangle(tangle, max_depth: int) -> FalsifyResult:
    """Breadth-first search over flip paths for a triangulation with nonzero shear.

    Returns the first witness found, or an exhausted result (which proves
    nothing) when every triangulation within ``max_depth`` flips gives zero.
    """
    if max_depth < 0:
        raise ValueError("max_depth must be nonnegative")
    items = [(_as_allowable(c), frac(w)) for c, w in _items(tangle)]
    vectors = [shear_T0(c) for c, _ in items]
    weights = [w for _, w in items]

    def total(vs):
        return tuple(sum(w * v[j] for v, w in zip(vs, weights)) for j in range(3))

    queue = deque([(T0, mutation.B, vectors)])
    explored = 0
    while queue:
        t, m, vs = queue.popleft()
        explored += 1
        s = total(vs)
        if any(s):
            return FalsifyResult(t, tuple(int(x) if x.denominator == 1 else x for x in s), max_depth, explored)
        if len(t.path) == max_depth:
            continue
        for k in (1, 2, 3):
            if t.path and t.path[-1] == k:
                continue
            queue.append((flip(t, k), mutation.mutate_exchange(m, k), [mutation.mutation_step(m, k, v) for v in vs]))
    return FalsifyResult(None, None, max_depth, explored)


# -- projected lines of arbitrary slope --------------------------------------


def _direction_positive(s) -> tuple:
    if s == INF:
        return (-1, 0, 1)
    return (-s, 1, s - 1)


def normalized_direction(sigma) -> tuple:
    """Direction (not unit length) of the normalized shear coordinates of ``lambda(sigma)``."""
    if sigma == INF or sigma == -INF:
        return (-1, 0, 1)
    s = frac(sigma)
    if s > 0:
        return _direction_positive(s)
    if s > -1:
        t = INF if s == 0 else (s + 1) / -s
        return tuple(frac(x) for x in cycle2(_direction_positive(t)))
    t = INF if s == -1 else 1 / (-1 - s)
    return tuple(frac(x) for x in cycle3(_direction_positive(t)))


def _sorted_by_slope(t: Triangulation):
    return sorted(t.arcs, key=slope)


def line_shear_positive(t: Triangulation, sigma) -> bool:
    """Whether the largest-slope arc of ``t`` carries a positive coordinate of ``lambda(sigma)``."""
    (a, b), (c, d), (e, f) = _sorted_by_slope(t)
    top = INF if e == 0 else Fraction(f, e)
    lower = Fraction(b + d, a + c)
    if sigma == INF:
        return False
    return lower < frac(sigma) < top


def top_arc_position(t: Triangulation) -> int:
    """1-based position of the arc of largest slope."""
    return t.arcs.index(_sorted_by_slope(t)[2]) + 1


class DegenerateInput(ValueError):
    """The ray ``s [1, y]`` runs through a Farey point."""


def separating_triangle(x, y, max_steps: int = 100_000) -> Tuple[Point, Point, Point]:
    """Farey triangle vertices ``[a,b], [c,d], [e,f]`` (increasing slope) with
    ``x < (b+d)/(a+c) < y < f/e``, met by walking outward along ``s [1, y]``.
    """
    if y == INF or y == -INF:
        raise ValueError("y must be finite")
    x, y = frac(x), frac(y)
    if not x < y:
        raise ValueError("need x < y")
    if y.denominator == 1:
        raise DegenerateInput(f"[1, {y}] is a Farey point")
    n = floor(y)
    lo, hi = (1, n), (1, n + 1)
    for _ in range(max_steps):
        mid = (lo[0] + hi[0], lo[1] + hi[1])
        ms = Fraction(mid[1], mid[0])
        if ms == y:
            raise DegenerateInput(f"the ray of slope {y} passes through the Farey point {mid}")
        (a, b), (c, d), (e, f) = lo, mid, hi
        if ms < y and x < Fraction(b + d, a + c):
            return (lo, mid, hi)
        if ms < y:
            lo = mid
        else:
            hi = mid
    raise RuntimeError("no separating triangle within the step limit")


def find_separating_triangulation(x, y) -> Triangulation:
    return triangulation_from_arcs(separating_triangle(x, y))
