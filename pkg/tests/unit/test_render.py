"""
Tests for exact clipping and SVG rendering.
"""

import pytest
from fractions import Fraction

from hingeset.core.errors import DegenerateInput
from hingeset.core.exact import AffineForm, Point2
from hingeset.core.hinge import HingeFunction
from hingeset.core.planar import positivity_set
from hingeset.render.svg import (
    RenderSpec,
    clip_line,
    clip_to_view,
    parse_viewbox,
    positive_regions,
    render,
    render_arrangement,
    render_hinge,
    render_set,
)


@pytest.fixture
def spec() -> RenderSpec:
    return RenderSpec.from_config()


def strictly_inside(poly, p: Point2) -> bool:
    n = len(poly)
    return all((poly[(i + 1) % n] - poly[i]).cross(p - poly[i]) > 0 for i in range(n))


def on_outline(poly, p: Point2) -> bool:
    n = len(poly)
    for i in range(n):
        a, b = poly[i], poly[(i + 1) % n]
        if (b - a).cross(p - a) == 0 and min(a.x, b.x) <= p.x <= max(a.x, b.x) and min(a.y, b.y) <= p.y <= max(a.y, b.y):
            return True
    return False


class TestViewbox:

    def test_parse(self):
        assert parse_viewbox("-1,-2,3/2,4") == (Fraction(-1), Fraction(-2), Fraction(3, 2), Fraction(4))

    def test_parse_wrong_count(self):
        with pytest.raises(DegenerateInput):
            parse_viewbox("0,0,1")

    def test_empty_viewbox(self, spec):
        with pytest.raises(DegenerateInput):
            RenderSpec(("1", "0", "1", "2"), 10, 10, "a", "b", "c", "d")

    def test_defaults_from_config(self, spec):
        assert spec.viewbox == (-4, -4, 4, 4)
        assert (spec.width, spec.height) == (480, 480)


class TestClipping:
    """Exact clipping against the viewbox."""

    def test_clip_axis(self, spec):
        a, b = clip_line(AffineForm(0, 1, 0), spec)
        assert {a, b} == {Point2(-4, 0), Point2(4, 0)}

    def test_clip_line_outside(self, spec):
        assert clip_line(AffineForm(1, 0, -10), spec) is None

    def test_clip_line_to_parameter_range(self, spec):
        segment = clip_line(AffineForm(0, 1, 0), spec, Fraction(0), None)
        assert segment is not None
        assert segment == (Point2(0, 0), Point2(-4, 0))

    def test_clip_polygon_to_view(self, spec):
        big = [Point2(0, 0), Point2(10, 0), Point2(10, 10), Point2(0, 10)]
        clipped = clip_to_view(big, spec)
        assert sorted(clipped) == [Point2(0, 0), Point2(0, 4), Point2(4, 0), Point2(4, 4)]
        assert clip_to_view([Point2(9, 9), Point2(10, 9), Point2(10, 10)], spec) == []


class TestRender:

    def test_hinge_classes(self, h1):
        svg = render_hinge(h1)
        assert svg.startswith("<?xml") or svg.lstrip().startswith("<svg")
        assert 'class="positive"' in svg
        assert 'class="valley"' in svg
        assert 'class="mountain"' in svg
        assert 'class="boundary"' in svg

    def test_empty_set_has_no_fill(self):
        svg = render_hinge(HingeFunction.constant(-1))
        assert 'class="positive"' not in svg

    def test_set(self, quadrant_set):
        svg = render_set(quadrant_set)
        assert 'class="positive"' in svg
        assert 'class="boundary"' in svg

    def test_dispatch(self, quadrant_set, h1):
        assert render(quadrant_set) == render_set(quadrant_set)
        assert render(h1) == render_hinge(h1)

    def test_arrangement(self, h1):
        result = positivity_set(h1)
        svg = render_arrangement(result)
        assert svg.count('class="arrangement"') == 3
        assert 'class="zero"' in svg
        assert render(result) == svg

    def test_custom_viewbox(self, h1):
        spec = RenderSpec.from_config(viewbox=parse_viewbox("0,0,1,1"))
        svg = render_hinge(h1, spec)
        assert 'viewBox="0' in svg

    @pytest.mark.slow
    def test_regions_match_sign_on_grid(self, h1, spec):
        """Test the filled polygons agree with the sign of h on a 100 x 100 grid."""
        result = positivity_set(h1)
        regions = positive_regions(result.arrangement, result.face_labels, spec)
        xmin, ymin, xmax, ymax = spec.viewbox
        step_x, step_y = (xmax - xmin) / 100, (ymax - ymin) / 100
        checked = 0
        for i in range(100):
            for j in range(100):
                p = Point2(xmin + (i + Fraction(1, 3)) * step_x, ymin + (j + Fraction(1, 7)) * step_y)
                value = h1(p)
                if value == 0 or any(on_outline(poly, p) for poly in regions):
                    continue
                filled = any(strictly_inside(poly, p) for poly in regions)
                assert filled == (value > 0), p
                checked += 1
        assert checked > 9000
