"""
Tests for exact line arrangements.
"""

from fractions import Fraction

from hingeset.core.arrangement import (
    box,
    build_arrangement,
    clip_polygon,
    distinct_lines,
    face_nonnegative,
    face_nonpositive,
    polygon_area2,
    recession_generators,
)
from hingeset.core.exact import AffineForm, Direction, Point2
from hingeset.samples import random_form


X = AffineForm(1, 0, 0)
Y = AffineForm(0, 1, 0)
DIAG = AffineForm(1, 1, -1)


class TestPolygonHelpers:

    def test_area_of_ccw_square(self):
        square = [Point2(0, 0), Point2(1, 0), Point2(1, 1), Point2(0, 1)]
        assert polygon_area2(square) == 2
        assert polygon_area2(list(reversed(square))) == -2

    def test_clip_square_in_half(self):
        square = [Point2(0, 0), Point2(1, 0), Point2(1, 1), Point2(0, 1)]
        right = clip_polygon(square, AffineForm(1, 0, Fraction(-1, 2)), 1)
        assert polygon_area2(right) == 1
        assert Point2(Fraction(1, 2), 0) in right

    def test_clip_away_everything(self):
        assert len(clip_polygon(box(Fraction(1)), AffineForm(1, 0, -5), 1)) < 3

    def test_recession_of_quadrant(self):
        assert recession_generators([X, Y]) == [Direction(0, 1), Direction(1, 0)]

    def test_recession_without_constraints(self):
        assert len(recession_generators([])) == 4

    def test_distinct_lines(self):
        forms = [AffineForm(2, 0, 0), X, AffineForm(-1, 0, 0), AffineForm(0, 0, 3)]
        assert distinct_lines(forms) == [X]


class TestBuildArrangement:
    """Vertex, edge and face counts of small arrangements."""

    def test_no_lines(self):
        arr = build_arrangement([])
        assert (len(arr.vertices), len(arr.edges), len(arr.faces)) == (0, 0, 1)
        assert not arr.faces[0].bounded

    def test_two_crossing_lines(self):
        arr = build_arrangement([X, Y])
        assert (len(arr.vertices), len(arr.edges), len(arr.faces)) == (1, 4, 4)
        assert arr.vertices[0].point == Point2(0, 0)
        assert len(arr.vertices[0].faces) == 4
        assert len(arr.vertices[0].edges) == 4

    def test_parallel_lines(self):
        arr = build_arrangement([X, AffineForm(1, 0, -1)])
        assert (len(arr.vertices), len(arr.edges), len(arr.faces)) == (0, 2, 3)
        assert not any(e.bounded for e in arr.edges)

    def test_three_lines_in_general_position(self):
        """Test x, y, x+y-1: one bounded triangle among seven faces."""
        arr = build_arrangement([X, Y, DIAG])
        assert (len(arr.vertices), len(arr.edges), len(arr.faces)) == (3, 9, 7)
        bounded = [f for f in arr.faces if f.bounded]
        assert len(bounded) == 1
        assert bounded[0].signs == (1, 1, -1)
        assert sum(1 for e in arr.edges if e.bounded) == 3

    def test_euler_characteristic(self, rng):
        for _ in range(15):
            forms = [random_form(rng) for _ in range(rng.randint(1, 5))]
            assert build_arrangement(forms).euler_characteristic() == 2

    def test_concurrent_lines(self):
        arr = build_arrangement([X, Y, AffineForm(1, -1, 0)])
        assert len(arr.vertices) == 1
        assert len(arr.faces) == 6
        assert len(arr.vertices[0].lines) == 3

    def test_face_lookup(self):
        arr = build_arrangement([X, Y])
        k = arr.face_of(Point2(1, 1))
        assert arr.faces[k].signs == (1, 1)
        assert arr.face_by_signs((1, 1)) == k
        assert arr.face_of(Point2(0, 5)) is None

    def test_face_samples_are_interior(self, rng):
        forms = [random_form(rng) for _ in range(4)]
        arr = build_arrangement(forms)
        for face in arr.faces:
            assert arr.signs_at(face.sample) == face.signs

    def test_edge_sides(self):
        arr = build_arrangement([X])
        edge = arr.edges[0]
        assert arr.faces[edge.positive_face].signs == (1,)
        assert arr.faces[edge.negative_face].signs == (-1,)
        assert X(edge.sample) == 0


class TestFaceSigns:
    """Sign tests on closed faces, bounded or not."""

    def test_unbounded_face_uses_recession(self):
        arr = build_arrangement([X, Y])
        quadrant = arr.faces[arr.face_of(Point2(1, 1))]
        assert face_nonnegative(quadrant, AffineForm(1, 1, 0))
        assert not face_nonnegative(quadrant, AffineForm(1, -1, 0))
        assert face_nonpositive(quadrant, AffineForm(-1, 0, 0))

    def test_bounded_face(self):
        arr = build_arrangement([X, Y, DIAG])
        triangle = next(f for f in arr.faces if f.bounded)
        assert face_nonpositive(triangle, DIAG)
        assert face_nonnegative(triangle, AffineForm(0, 0, 0))
