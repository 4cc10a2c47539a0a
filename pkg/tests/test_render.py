import re

import pytest

from ptorus.fan import fan_census
from ptorus.render import ProjectionConfig, render_fan_svg


def _counts(svg):
    return {k: len(re.findall(f'class="{k}"', svg)) for k in ("cone3", "cone2", "ray", "equator")}


def test_labels_and_determinism():
    a = render_fan_svg()
    b = render_fan_svg()
    assert a == b
    labels = re.findall(r"<text[^>]*>([^<]*)</text>", a)
    assert labels == ["e1", "e2", "e3"]
    assert a.startswith("<?xml") and a.rstrip().endswith("</svg>")


@pytest.mark.parametrize("h", [1, 2, 4])
def test_counts_match_census(h):
    census = fan_census(h)
    c = _counts(render_fan_svg(ProjectionConfig(max_height=h)))
    assert c["cone3"] == sum(1 for x in census if x.dim == 3)
    assert c["cone2"] == sum(1 for x in census if x.dim == 2)
    assert c["ray"] == sum(1 for x in census if x.dim == 1)
    assert c["equator"] == 1


def test_height_one_contents():
    census = fan_census(1)
    kinds = [c.kind for c in census if c.dim == 3]
    assert kinds.count("positive_orthant") == 1 and kinds.count("negative_orthant") == 1
    assert kinds.count("triangle") == 12
    svg = render_fan_svg(ProjectionConfig(max_height=1))
    # the nonpositive orthant surrounds the pole, so it is drawn as a complement
    assert svg.count('fill-rule="evenodd"') == 1


def test_polyline_sampling():
    svg = render_fan_svg(ProjectionConfig(max_height=1, samples=64))
    arc = re.search(r'<polyline class="cone2" points="([^"]*)"', svg).group(1)
    assert len(arc.split()) == 65


def test_height_zero_rejected():
    with pytest.raises(ValueError):
        render_fan_svg(ProjectionConfig(max_height=0))
