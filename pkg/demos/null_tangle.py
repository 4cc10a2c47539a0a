"""Three closed curves whose shears cancel at the base triangulation.

A breadth-first search over flips finds a triangulation where they do not.
"""

from ptorus import surface

tangle = {surface.cl(1, 0): 1, surface.cl(0, 1): 1, surface.cl(1, -1): 1}
print("shear at base:", surface.tangle_shear(tangle, surface.T0))

res = surface.falsify_null_tangle(tangle, 6)
print(f"witness after flips {list(res.witness.path)}: arcs {res.witness.arcs}, shear {res.shear}")

for k in (1, 2, 3):
    t = surface.flip(surface.T0, k)
    print(f"  flip {k}: {surface.tangle_shear(tangle, t)}")
