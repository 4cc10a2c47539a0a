"""A short walk through the package: shears, mutation, the fan and the basis."""

from fractions import Fraction

from ptorus import fan, mutation, surface
from ptorus._exact import format_vector

print("shear coordinates at the base triangulation")
for c in (surface.ccw(2, 3), surface.cl(2, 3)):
    print(f"  {c}: {format_vector(surface.shear_T0(c))}  word {surface.curve_word(c)}")
print(f"  cw:2/3: {format_vector(surface.shear_T0(surface.cw(2, 3)))}")

print("\nthe same curve after flipping arc 3, then arc 1")
t = surface.follow([3, 1])
print(f"  arcs {t.arcs}")
print(f"  ccw(2,3): {format_vector(surface.shear_wrt(t, surface.ccw(2, 3)))}")

print("\nmutating at 1 then 2 (eta21) on a few plane vectors")
for v in ((1, -1, 0), (-1, 1, 0), (3, -5, 2)):
    print(f"  {format_vector(v)} -> {format_vector(mutation.eta21(v))}")

print("\nlocating vectors in the mutation fan")
for v in ((3, -1, -4), (Fraction(1, 2), Fraction(-7, 3), 2), (1, -1, 0)):
    print(f"  {format_vector(v)}: {fan.locate_in_fan(v).describe()}")

print("\nexpanding an integer vector in the positive basis")
v = (5, -2, 7)
cone, terms = fan.basis_expand(v)
print(f"  {format_vector(v)} = " + " + ".join(f"{c}*[{format_vector(e.vector)}]" for e, c in terms))
rel = fan.expansion_residual_relation(v, terms)
print(f"  residual relation coherent to depth 6: {mutation.is_b_coherent(rel, 6).ok}")
