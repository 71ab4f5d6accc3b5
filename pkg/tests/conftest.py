import random

import pytest

from hingeset.core.cones import Arc, PolytopalCone, normalize_cone
from hingeset.core.exact import AffineForm, Direction, Point2
from hingeset.core.hinge import HingeFunction
from hingeset.core.planar import ConvexCell, PolytopalSet
from hingeset.samples import figure_hinge, four_fan_hinge, three_fan
from hingeset.synthesis.polygons import REFERENCE_TRIANGLE, convex_cell_from_vertices


@pytest.fixture
def rng():
    """Seeded generator; every randomized test is reproducible."""
    return random.Random(20240611)


# ============================================================================
# Cones
# ============================================================================

@pytest.fixture
def quadrant() -> PolytopalCone:
    return normalize_cone([Arc(Direction(1, 0), Direction(0, 1))])


@pytest.fixture
def half_plane() -> PolytopalCone:
    """The open half-plane x > 0."""
    return normalize_cone([Arc(Direction(0, -1), Direction(0, 1))])


@pytest.fixture
def two_fan() -> PolytopalCone:
    """First and third open quadrants."""
    return normalize_cone([Arc(Direction(1, 0), Direction(0, 1)), Arc(Direction(-1, 0), Direction(0, -1))])


@pytest.fixture
def fan3() -> PolytopalCone:
    return three_fan()


# ============================================================================
# Hinge functions
# ============================================================================

@pytest.fixture
def h1() -> HingeFunction:
    """x - 1 + |x-1| + |y| - |y-x|"""
    return figure_hinge()


@pytest.fixture
def triangle_hinge() -> HingeFunction:
    return REFERENCE_TRIANGLE


@pytest.fixture
def four_fan() -> HingeFunction:
    return four_fan_hinge()


@pytest.fixture
def abs_sum() -> HingeFunction:
    """|x| + |y|"""
    return HingeFunction(AffineForm(0, 0, 0), (AffineForm(1, 0, 0), AffineForm(0, 1, 0)))


# ============================================================================
# Sets and polygons
# ============================================================================

@pytest.fixture
def quadrant_cell() -> ConvexCell:
    return ConvexCell((AffineForm(1, 0, 0), AffineForm(0, 1, 0)))


@pytest.fixture
def quadrant_set(quadrant_cell) -> PolytopalSet:
    return PolytopalSet((quadrant_cell,))


@pytest.fixture
def unit_square() -> ConvexCell:
    return convex_cell_from_vertices([Point2(0, 0), Point2(1, 0), Point2(1, 1), Point2(0, 1)])


@pytest.fixture
def reference_triangle() -> ConvexCell:
    return convex_cell_from_vertices([Point2(0, 0), Point2(2, 0), Point2(0, 2)])
