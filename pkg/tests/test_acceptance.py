"""Acceptance criteria, one test each.

Every test records a PASS/FAIL line (shown in the pytest terminal summary)
before asserting. Run ``python tests/test_acceptance.py`` to print the
lines without pytest.
"""

import os
import random
import re
import sys
import time
from fractions import Fraction
from math import gcd

sys.path.insert(0, os.path.dirname(__file__))

from acceptance_log import lines, record  # noqa: E402
from oracles import geometric_shear, primitive_plane_vectors, random_rational, random_standard_point  # noqa: E402

from ptorus import fan, mutation, surface  # noqa: E402
from ptorus.render import ProjectionConfig, render_fan_svg  # noqa: E402

# time limits in seconds
LIMIT_FIGURE = 1e-3
LIMIT_ORACLE_SWEEP = 1.0
LIMIT_ETA21 = 1.0
LIMIT_FAN = 30.0
LIMIT_BASIS = 60.0
LIMIT_TANGLES = 60.0


def _timed(fn):
    t = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t


def test_01_figure_values():
    def run():
        return (
            surface.shear_T0(surface.ccw(2, 3)),
            surface.shear_word_oracle(surface.ccw(2, 3)),
            surface.shear_T0(surface.cl(2, 3)),
            surface.shear_word_oracle(surface.cl(2, 3)),
        )

    # steady-state timing: best of several runs
    best = min(_timed(run)[1] for _ in range(5))
    vals = run()
    ok = vals == ((-2, 3, 0), (-2, 3, 0), (-3, 2, 1), (-3, 2, 1)) and best < LIMIT_FIGURE
    record(1, "figure values ccw(2,3), cl(2,3) via formula and word oracle", ok, f"{best * 1e3:.3f} ms < 1 ms")
    assert ok


def test_02_formula_vs_word_oracle():
    def run():
        bad = 0
        count = 0
        for n in range(1, 61):
            for a in range(0, n):
                b = n - a
                if gcd(a, b) != 1:
                    continue
                for c in (surface.ccw(a, b), surface.cl(a, b)):
                    count += 1
                    bad += surface.shear_T0(c) != surface.shear_word_oracle(c)
        return bad, count

    (bad, count), dt = _timed(run)
    ok = bad == 0 and dt < LIMIT_ORACLE_SWEEP
    record(2, "formula = word oracle for a+b <= 60", ok, f"{count} curves, {bad} discrepancies, {dt:.3f} s < 1 s")
    assert ok


def test_03_eta21():
    rng = random.Random(3)
    vs = []
    for _ in range(10_000):
        x, y = rng.randint(-1000, 1000), rng.randint(-1000, 1000)
        vs.append((x, y, -x - y))

    def run():
        bad = sum(mutation.eta21(v) != mutation.eta21_closed_form(v) for v in vs)
        fixes = mutation.eta21((1, -1, 0)) == (1, -1, 0)
        sectors = all(
            {mutation.eta21(g) for g in mutation.sector_generators(j)} == set(mutation.sector_generators(j + 2))
            for j in range(-12, 13)
        )
        return bad, fixes, sectors

    (bad, fixes, sectors), dt = _timed(run)
    ok = bad == 0 and fixes and sectors and dt < LIMIT_ETA21
    record(3, "eta21 closed form, fixed vector, sector shift", ok, f"{bad} mismatches / 10^4, {dt:.3f} s < 1 s")
    assert ok


def test_04_mutation_involutions():
    rng = random.Random(4)
    ok_mu1 = mutation.mutate_matrix(mutation.B, 1) == mutation.NEG_B
    inv_bad = 0
    for _ in range(1000):
        m = [[0] * 3 for _ in range(3)]
        for i in range(3):
            for j in range(i + 1, 3):
                x = rng.randint(-6, 6)
                m[i][j], m[j][i] = x, -x
        rows = [tuple(r) for r in m] + [tuple(rng.randint(-9, 9) for _ in range(3)) for _ in range(rng.randint(0, 3))]
        k = rng.randint(1, 3)
        inv_bad += mutation.mutate_matrix(mutation.mutate_matrix(tuple(rows), k), k) != tuple(rows)
    eta_bad = 0
    for _ in range(1000):
        v = tuple(random_rational(rng) for _ in range(3))
        ks = [rng.randint(1, 3) for _ in range(rng.randint(1, 6))]
        eta_bad += mutation.inverse_map(mutation.B, ks, mutation.mutation_map(mutation.B, ks, v)) != v
    ok = ok_mu1 and inv_bad == 0 and eta_bad == 0
    record(4, "mu_1(B) = -B, mutation involution, eta inverse", ok, f"{inv_bad} + {eta_bad} failures / 2000")
    assert ok


def test_05_fan_completeness():
    rng = random.Random(5)

    def run():
        bad = 0
        for _ in range(10_000):
            v = tuple(random_rational(rng) for _ in range(3))
            c = fan.locate_in_fan(v)
            if not fan.in_relative_interior(c, v):
                bad += 1
        maximal = [c for c in fan.fan_census(6) if c.dim == 3 or c.kind == "ray"]
        # half the pairs share a generator, so the intersection test is not vacuous
        by_gen = {}
        for c in maximal:
            for g in c.key:
                by_gen.setdefault(g, []).append(c)
        pair_bad = 0
        for n in range(500):
            if n % 2:
                c1, c2 = rng.sample(maximal, 2)
            else:
                group = rng.choice([g for g in by_gen.values() if len(g) > 1])
                c1, c2 = rng.sample(group, 2)
            pair_bad += not fan.intersect_is_common_face(c1, c2)
        return bad, pair_bad

    (bad, pair_bad), dt = _timed(run)
    ok = bad == 0 and pair_bad == 0 and dt < LIMIT_FAN
    record(5, "fan completeness and face intersections", ok, f"{bad} unlocated / 10^4, {pair_bad} bad pairs / 500, {dt:.1f} s < 30 s")
    assert ok


def test_06_integer_basis():
    rng = random.Random(6)

    def run():
        bad = 0
        rels = []
        for _ in range(1000):
            v = tuple(rng.randint(-100, 100) for _ in range(3))
            _, terms = fan.basis_expand(v)
            if len(terms) > 3 or any(c < 0 or Fraction(c).denominator != 1 for _, c in terms):
                bad += 1
            if tuple(sum(c * e.vector[k] for e, c in terms) for k in range(3)) != v:
                bad += 1
            rels.append(fan.expansion_residual_relation(v, terms))
        incoherent = sum(not mutation.is_b_coherent(r, 6).ok for r in rels[:200])
        return bad, incoherent

    (bad, incoherent), dt = _timed(run)
    ok = bad == 0 and incoherent == 0 and dt < LIMIT_BASIS
    record(6, "integer expansions and depth-6 coherence of residuals", ok, f"{bad} bad / 10^3, {incoherent} incoherent / 200, {dt:.1f} s < 60 s")
    assert ok


def test_07_coefficient_census():
    ok = True
    for h in range(1, 6):
        rows = fan.enumerate_universal_coeffs(h, "Z")
        item = {1: set(), 2: set(), 3: set()}
        for e in rows:
            item[e.item].add(e.vector)
        pts = [(a, b) for a in range(0, h + 1) for b in range(0, h + 1) if gcd(a, b) == 1 and (a > 0 or b == 1)]
        exp1, exp2 = set(), set()
        for a, b in pts:
            if b >= 1:
                v = (1 - b, a + 1, b - a - 1)
                exp1 |= {v, (v[1], v[2], v[0]), (v[2], v[0], v[1])}
            if a >= 1:
                v = (-1 - b, a - 1, b - a + 1)
                exp2 |= {v, (v[1], v[2], v[0]), (v[2], v[0], v[1])}
        ok &= item[1] == exp1 and item[2] == exp2
        ok &= item[3] == primitive_plane_vectors(h)
        ok &= {g for _, g in fan.g_vectors(h)} == item[1]
        # each row is the shear vector of its curve: ccw rows item 1, cw rows item 2
        ok &= all(surface.shear_T0(e.provenance) == e.vector for e in rows)
    record(7, "universal coefficient census to height 5", ok)
    assert ok


def test_08_null_tangles():
    rng = random.Random(8)

    def random_tangle():
        curves = set()
        n = rng.randint(1, 4)
        while len(curves) < n:
            p = random_standard_point(rng, 10)
            curves.add(surface.Curve(rng.choice(("cl", "cw", "ccw")), p))
        return {c: rng.choice((-3, -2, -1, 1, 2, 3)) for c in sorted(curves, key=str)}

    def run():
        missed = 0
        for _ in range(100):
            if falsify(random_tangle()).witness is None:
                missed += 1
        special = {surface.cl(1, 0): 1, surface.cl(0, 1): 1, surface.cl(1, -1): 1}
        res = falsify(special)
        at_t0 = surface.tangle_shear(special, surface.T0)
        flip3 = surface.flip(surface.T0, 3)
        at_flip3 = surface.tangle_shear(special, flip3)
        # independent check of the flipped value by the lattice-map oracle
        oracle = tuple(sum(w * x for w, x in zip((1, 1, 1), col)) for col in zip(*(geometric_shear(flip3, c) for c in special)))
        return missed, res, at_t0, at_flip3, oracle

    def falsify(t):
        return surface.falsify_null_tangle(t, 10)

    (missed, res, at_t0, at_flip3, oracle), dt = _timed(run)
    ok = (
        missed == 0
        and at_t0 == (0, 0, 0)
        and res.depth == 1
        and at_flip3 == (2, -2, 0) == oracle
        and dt < LIMIT_TANGLES
    )
    record(8, "null tangles falsified within depth 10", ok, f"{missed} unfalsified / 100, special witness depth {res.depth}, {dt:.2f} s < 60 s")
    assert ok


def test_09_rescaling():
    m = fan.RescaleMap((1, 2, 1))
    ok = m.exchange_matrix() == ((0, 4, -2), (-1, 0, 1), (2, -4, 0))
    cones = fan.fan_census(10)
    rays = [c.generators[0] for c in cones if c.kind == "plane_ray"]
    rays += [c.generators[1] for c in cones if c.kind == "ray"]
    rays += [e.vector for e in fan.enumerate_universal_coeffs(10) if e.item == 3]
    mapped = fan.rescale_cones(m, [fan.Cone("plane_ray", (r,)) for r in rays])
    ok &= all(2 * x + y + 2 * z == 0 for c in mapped for (x, y, z) in c.generators)
    # nothing off the plane lands on it
    others = [g for c in fan.rescale_cones(m, cones) if c.kind in ("triangle", "positive_orthant", "negative_orthant") for g in c.generators]
    ok &= all(2 * x + y + 2 * z != 0 for (x, y, z) in others)
    record(9, "diag(1,2,1) sends plane rays into 2x+y+2z=0", ok, f"{len(rays)} rays")
    assert ok


def test_10_separation():
    tri = surface.separating_triangle(0, Fraction(7, 5))
    (a, b), (c, d), (e, f) = tri
    ok = 0 < Fraction(b + d, a + c) < Fraction(7, 5) < Fraction(f, e)
    t = surface.find_separating_triangulation(0, Fraction(7, 5))
    ok &= set(t.arcs) == set(tri)
    rng = random.Random(10)
    ts = [surface.follow([rng.randint(1, 3) for _ in range(rng.randint(0, 10))]) for _ in range(20)]
    disagree = 0
    for _ in range(100):
        s = Fraction(rng.randint(-200, 200), rng.randint(1, 50))
        for tt in ts:
            v = surface.transport(tt, surface.normalized_direction(s))
            disagree += surface.line_shear_positive(tt, s) != (v[surface.top_arc_position(tt) - 1] > 0)
    ok &= disagree == 0
    record(10, "separating triangulation and slope inequality", ok, f"triangle {tri}, {disagree} disagreements / 2000")
    assert ok


def test_11_renderer():
    a = render_fan_svg()
    b = render_fan_svg()
    labels = re.findall(r"<text[^>]*>([^<]*)</text>", a)
    ok = a == b and labels == ["e1", "e2", "e3"]
    for h in (1, 2, ProjectionConfig().max_height):
        census = fan.fan_census(h)
        svg = render_fan_svg(ProjectionConfig(max_height=h))
        for cls, dim in (("cone3", 3), ("cone2", 2), ("ray", 1)):
            ok &= svg.count(f'class="{cls}"') == sum(1 for c in census if c.dim == dim)
    record(11, "renderer labels, determinism, census counts", ok)
    assert ok


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
            except AssertionError:
                failed += 1
    print("\n".join(lines()))
    sys.exit(1 if failed else 0)
