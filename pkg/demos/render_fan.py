"""Write fan.svg: the mutation fan, stereographically projected, to height 4."""

import sys

from ptorus import fan
from ptorus.render import ProjectionConfig, render_fan_svg

out = sys.argv[1] if len(sys.argv) > 1 else "fan.svg"
cfg = ProjectionConfig(max_height=4)
with open(out, "w") as fh:
    fh.write(render_fan_svg(cfg))

census = fan.fan_census(cfg.max_height)
print(f"wrote {out}: {len(census)} cones")
for d in (3, 2, 1):
    print(f"  dimension {d}: {sum(1 for c in census if c.dim == d)}")
