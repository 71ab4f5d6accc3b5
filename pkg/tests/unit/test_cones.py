"""
Tests for polytopal cones and the realizability criterion.
"""

import pytest

from hingeset.core.cones import (
    DIM0,
    DIM1,
    DIM2,
    Arc,
    PolytopalCone,
    boundary_rays,
    check_cone_condition,
    complement_of_boundary,
    compute_G_span,
    compute_R,
    compute_R_parts,
    cone_from_predicate,
    g_lines,
    negate_cone,
    normalize_cone,
)
from hingeset.core.exact import Direction
from hingeset.samples import even_fan, odd_fan, random_cone, three_arc_cone


E, N, W, S = Direction(1, 0), Direction(0, 1), Direction(-1, 0), Direction(0, -1)


@pytest.fixture
def three_spikes() -> PolytopalCone:
    """Three narrow arcs near 0, 110 and 235 degrees: no antipodes, hull contains 0."""
    return normalize_cone([
        Arc(Direction(4, -1), Direction(4, 1)),
        Arc(Direction(-1, 4), Direction(-2, 3)),
        Arc(Direction(-3, -2), Direction(-1, -4)),
    ])


# ============================================================================
# Canonical form
# ============================================================================

class TestNormalize:
    """Union of raw arcs into maximal open arcs."""

    def test_overlapping_arcs_merge(self):
        cone = normalize_cone([Arc(E, N), Arc(Direction(1, 1), W)])
        assert cone.arcs == (Arc(E, W),)

    def test_adjacent_arcs_stay_apart(self):
        """Test the shared ray is not in the open cone."""
        cone = normalize_cone([Arc(E, N), Arc(N, W)])
        assert cone.arcs == (Arc(E, N), Arc(N, W))
        assert not cone.contains(N)

    def test_circle_minus_a_ray(self):
        cone = normalize_cone([Arc(E, E)])
        assert cone.arcs == (Arc(E, E),)
        assert cone.contains(W)
        assert not cone.contains(E)

    def test_empty_and_full(self):
        assert normalize_cone([]).is_empty
        assert normalize_cone([Arc(E, W), Arc(Direction(0, -1), N)]).is_full is False
        assert normalize_cone([Arc(E, W), Arc(W, E), Arc(S, N), Arc(N, S)]).is_full

    def test_arcs_sorted_from_east(self):
        cone = normalize_cone([Arc(S, Direction(1, -1)), Arc(N, W)])
        assert [a.start for a in cone.arcs] == [N, S]

    def test_normalize_is_idempotent(self, rng):
        for _ in range(30):
            cone = random_cone(rng)
            if cone.arcs:
                assert normalize_cone(list(cone.arcs)) == cone

    def test_cone_from_predicate(self):
        cone = cone_from_predicate([], lambda d: d.dx > 0)
        assert cone.arcs == (Arc(S, N),)

    def test_full_and_empty_membership(self):
        assert PolytopalCone.full().contains(E)
        assert not PolytopalCone.empty().contains(E)


class TestConeOperations:

    def test_negate(self, quadrant):
        assert negate_cone(quadrant).arcs == (Arc(W, S),)
        assert -PolytopalCone.full() == PolytopalCone.full()

    def test_negation_is_pointwise(self, rng):
        for _ in range(20):
            cone = random_cone(rng)
            neg = -cone
            for d in (E, N, W, S, Direction(2, 3), Direction(-5, 1)):
                assert neg.contains(d) == cone.contains(-d)

    def test_boundary_rays(self, quadrant, two_fan):
        assert boundary_rays(quadrant) == [E, N]
        assert boundary_rays(two_fan) == [E, N, W, S]
        assert boundary_rays(PolytopalCone.full()) == []

    def test_complement_of_boundary(self, quadrant):
        comp = complement_of_boundary(quadrant)
        assert comp.contains(Direction(1, 1))
        assert comp.contains(W)
        assert not comp.contains(E)
        assert not comp.contains(N)
        assert len(comp.arcs) == 2

    def test_complement_of_boundary_full(self):
        assert complement_of_boundary(PolytopalCone.empty()).is_full


# ============================================================================
# R and G
# ============================================================================

class TestRAndG:
    """Directions without an antipode in the cone, and boundary lines."""

    def test_R_of_quadrant_is_quadrant(self, quadrant):
        assert compute_R(quadrant) == quadrant

    def test_R_of_symmetric_cone_is_empty(self, two_fan):
        parts = compute_R_parts(two_fan)
        assert parts.is_empty
        assert compute_R(two_fan).is_empty

    def test_R_of_reflex_cone(self):
        """Test C = (0, 270 degrees) leaves the closed second quadrant."""
        cone = normalize_cone([Arc(E, S)])
        r = compute_R_parts(cone)
        assert N in r.rays and W in r.rays
        assert r.cone.contains(Direction(-1, 1))
        assert not r.cone.contains(Direction(1, 1))

    def test_G_lines(self, quadrant, half_plane, two_fan, fan3):
        assert g_lines(quadrant) == []
        assert g_lines(half_plane) == [N]
        assert g_lines(two_fan) == [E, N]
        assert len(g_lines(fan3)) == 3

    def test_G_span_kinds(self, quadrant, half_plane, two_fan):
        assert compute_G_span(quadrant).kind == DIM0
        span = compute_G_span(half_plane)
        assert span.kind == DIM1
        assert span.line == N
        assert span.dim == 1
        assert compute_G_span(two_fan).dim == 2


# ============================================================================
# Realizability verdicts
# ============================================================================

class TestCheckConeCondition:
    """The decision procedure on reference cones."""

    def test_full_and_empty(self):
        for cone in (PolytopalCone.full(), PolytopalCone.empty()):
            verdict = check_cone_condition(cone)
            assert verdict.realizable
            assert verdict.g_span.kind == DIM0

    def test_quadrant(self, quadrant):
        verdict = check_cone_condition(quadrant)
        assert verdict.realizable
        assert verdict.g_span.kind == DIM0
        assert verdict.r_cone == quadrant
        assert verdict.r_set.strictly_inside(verdict.normal)

    def test_half_plane(self, half_plane):
        verdict = check_cone_condition(half_plane)
        assert verdict.realizable
        assert verdict.g_span.kind == DIM1
        assert verdict.normal == E

    def test_two_fan(self, two_fan):
        verdict = check_cone_condition(two_fan)
        assert verdict.realizable
        assert verdict.g_span.kind == DIM2
        assert verdict.r_cone.is_empty

    def test_three_fan_rejected(self, fan3):
        verdict = check_cone_condition(fan3)
        assert not verdict.realizable
        assert verdict.g_span.kind == DIM2
        assert len(verdict.certificate) == 1
        assert fan3.contains(verdict.certificate[0])
        assert not fan3.contains(-verdict.certificate[0])

    def test_three_spikes_rejected(self, three_spikes):
        """Test a Dim 0 cone whose R positively spans the plane."""
        verdict = check_cone_condition(three_spikes)
        assert not verdict.realizable
        assert verdict.g_span.kind == DIM0
        assert len(verdict.certificate) in (2, 3)

    def test_reflex_cone_is_realizable(self):
        verdict = check_cone_condition(normalize_cone([Arc(E, S)]))
        assert verdict.realizable
        assert verdict.g_span.kind == DIM0

    def test_dim1_spanning_R_rejected(self):
        """Test one boundary line with R on both of its sides."""
        cone = normalize_cone([
            Arc(E, Direction(1, 1)),
            Arc(Direction(-1, 1), W),
            Arc(Direction(1, -3), Direction(1, -2)),
        ])
        verdict = check_cone_condition(cone)
        assert verdict.g_span.kind == DIM1
        assert not verdict.realizable

    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_even_fans_realizable(self, m):
        assert check_cone_condition(even_fan(m)).realizable

    @pytest.mark.parametrize("n", [3, 5, 7])
    def test_odd_fans_rejected(self, n):
        verdict = check_cone_condition(odd_fan(n))
        assert not verdict.realizable
        assert verdict.g_span.kind == DIM2

    def test_single_line_fan_is_half_plane(self):
        verdict = check_cone_condition(odd_fan(1))
        assert verdict.realizable
        assert verdict.g_span.kind == DIM1

    def test_odd_fan_needs_odd_count(self):
        with pytest.raises(ValueError):
            odd_fan(4)

    def test_verdict_invariant_under_negation(self, rng):
        for _ in range(40):
            cone = random_cone(rng)
            assert check_cone_condition(cone).realizable == check_cone_condition(-cone).realizable


# ============================================================================
# Brute-force cross-check on a direction grid
# ============================================================================

# Cone endpoints have entries in [-9, 9]; every critical direction, arc
# sample and candidate normal the checker uses has entries in [-18, 18].
GRID = sorted({Direction.from_vector(x, y) for x in range(-18, 19) for y in range(-18, 19) if x or y}, key=lambda d: (d.dx, d.dy))
NUDGE = 1000


def nudged(d: Direction, k: int) -> Direction:
    """d turned by a small angle, counterclockwise for k = 1."""
    return Direction.from_vector(NUDGE * d.dx - k * d.dy, NUDGE * d.dy + k * d.dx)


def grid_boundary(cone: PolytopalCone) -> set:
    return {
        d for d in GRID
        if max(abs(d.dx), abs(d.dy)) <= 9
        and not cone.contains(d)
        and (cone.contains(nudged(d, 1)) or cone.contains(nudged(d, -1)))
    }


def grid_r(cone: PolytopalCone) -> list:
    return [d for d in GRID if cone.contains(d) and not cone.contains(-d)]


def grid_realizable(cone: PolytopalCone) -> bool:
    """Half-plane tests on grid samples of R, with G read off the grid boundary."""
    r = grid_r(cone)
    boundary = grid_boundary(cone)
    lines = {d.canonical_line() for d in boundary if -d in boundary}
    if len(lines) >= 2:
        return not r
    if len(lines) == 1:
        n = next(iter(lines)).perp_ccw()
        return all(n.dot(d) > 0 for d in r) or all(n.dot(d) < 0 for d in r)
    return any(all(n.dot(d) > 0 for d in r) for n in GRID)


def grid_cones(rng):
    cones = [random_cone(rng, 4) for _ in range(25)]
    return cones + [odd_fan(3), odd_fan(5), even_fan(2), normalize_cone([Arc(E, E)])]


class TestGridCrossCheck:
    """R, boundary rays, G and the verdict against direct membership tests."""

    def test_boundary_rays(self, rng, three_spikes):
        for cone in grid_cones(rng) + [three_spikes]:
            assert set(boundary_rays(cone)) == grid_boundary(cone)

    def test_R_membership(self, rng):
        """Test compute_R is the open part of {d in C : -d not in C}."""
        for cone in grid_cones(rng) + [complement_of_boundary(three_arc_cone())]:
            r = compute_R(cone)

            def in_r(d):
                return cone.contains(d) and not cone.contains(-d)

            for d in GRID:
                assert r.contains(d) == (in_r(d) and in_r(nudged(d, 1)) and in_r(nudged(d, -1)))

    def test_G_span(self, rng):
        for cone in grid_cones(rng):
            boundary = grid_boundary(cone)
            lines = {d.canonical_line() for d in boundary if -d in boundary}
            assert set(g_lines(cone)) == lines
            assert compute_G_span(cone).dim == min(len(lines), 2)

    def test_verdict(self, rng, three_spikes):
        verdicts = []
        for cone in grid_cones(rng) + [three_spikes]:
            verdict = check_cone_condition(cone)
            assert verdict.realizable == grid_realizable(cone), cone
            verdicts.append((verdict.g_span.kind, verdict.realizable))
        assert (DIM0, False) in verdicts
        assert (DIM2, False) in verdicts
