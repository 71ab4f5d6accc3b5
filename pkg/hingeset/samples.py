"""
Seeded generators for cones, hinge functions, points and polygons.

Shared by the test suite and the evals runner. Every generator takes a
``random.Random`` so runs are reproducible from a seed.
"""

import random
from fractions import Fraction
from typing import List, Sequence

from hingeset.core.cones import Arc, PolytopalCone, check_cone_condition, normalize_cone
from hingeset.core.exact import AffineForm, Direction, Point2, sort_ccw
from hingeset.core.hinge import HingeFunction, PosHomCPWL

DIRECTION_BOUND = 9
COEFFICIENT_BOUND = 3
MAX_ARCS = 6
MAX_TERMS = 6


def random_direction(rng: random.Random, bound: int = DIRECTION_BOUND) -> Direction:
    while True:
        x, y = rng.randint(-bound, bound), rng.randint(-bound, bound)
        if x or y:
            return Direction.from_vector(x, y)


def random_rational(rng: random.Random, bound: int = COEFFICIENT_BOUND) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_point(rng: random.Random, bound: int = 6) -> Point2:
    return Point2(Fraction(rng.randint(-bound, bound), rng.randint(1, 3)), Fraction(rng.randint(-bound, bound), rng.randint(1, 3)))


def random_form(rng: random.Random) -> AffineForm:
    while True:
        form = AffineForm(random_rational(rng), random_rational(rng), random_rational(rng))
        if not form.is_constant():
            return form


def random_hinge(rng: random.Random, max_terms: int = MAX_TERMS) -> HingeFunction:
    """Random base plus 1..max_terms terms, each a valley or a mountain."""
    base = AffineForm(random_rational(rng), random_rational(rng), random_rational(rng))
    plus, minus = [], []
    for _ in range(rng.randint(1, max_terms)):
        (plus if rng.random() < 0.5 else minus).append(random_form(rng))
    return HingeFunction(base, tuple(plus), tuple(minus))


def random_homogeneous_hinge(rng: random.Random, max_terms: int = MAX_TERMS) -> HingeFunction:
    """Random hinge function whose break lines all pass through the origin."""
    h = random_hinge(rng, max_terms)

    def strip(f: AffineForm) -> AffineForm:
        return AffineForm(f.a, f.b, 0)

    terms = [(s, strip(t)) for s, t in h.weighted_terms() if not strip(t).is_zero()]
    return HingeFunction.from_terms(strip(h.base), terms)


# =============================================================================
# Cones
# =============================================================================

def random_cone(rng: random.Random, max_arcs: int = MAX_ARCS) -> PolytopalCone:
    """Canonical cone from 1..max_arcs arcs between distinct random rays."""
    k = rng.randint(1, max_arcs)
    rays: List[Direction] = []
    while len(rays) < 2 * k:
        d = random_direction(rng)
        if d not in rays:
            rays.append(d)
    rays = sort_ccw(rays)
    return normalize_cone([Arc(rays[2 * i], rays[2 * i + 1]) for i in range(k)])


def random_realizable_cone(rng: random.Random, max_arcs: int = MAX_ARCS, attempts: int = 1000) -> PolytopalCone:
    for _ in range(attempts):
        cone = random_cone(rng, max_arcs)
        if check_cone_condition(cone).realizable:
            return cone
    raise RuntimeError("no realizable cone drawn")


def alternating_fan(lines: Sequence[Direction]) -> PolytopalCone:
    """Every other wedge cut out by full lines through the origin."""
    rays = sort_ccw([d for line in lines for d in (line, -line)])
    return normalize_cone([Arc(rays[2 * i], rays[2 * i + 1]) for i in range(len(rays) // 2)])


def fan_lines(n: int) -> List[Direction]:
    """n distinct lines through the origin with slopes in (0, inf)."""
    return [Direction.from_vector(n - j, j + 1) for j in range(n)]


def even_fan(m: int) -> PolytopalCone:
    """The 2m-fan: centrally symmetric, 2m wedges on 2m lines."""
    return alternating_fan(fan_lines(2 * m))


def odd_fan(n: int) -> PolytopalCone:
    """The n-fan on n lines (n odd): not centrally symmetric."""
    if n % 2 == 0:
        raise ValueError("odd_fan needs an odd number of lines")
    return alternating_fan(fan_lines(n))


def three_fan() -> PolytopalCone:
    """Wedges between alternate rays of the lines y=0, y=x and y=-x."""
    return alternating_fan([Direction(1, 0), Direction(1, 1), Direction(-1, 1)])


def three_arc_cone() -> PolytopalCone:
    """Realizable cone whose boundary complement is not realizable.

    No boundary ray has its antipode on the boundary, so removing the six
    rays leaves R equal to their negatives, which positively span the plane.
    """
    return normalize_cone([
        Arc(Direction(3, 2), Direction(-1, 7)),
        Arc(Direction(-2, -9), Direction(9, -8)),
        Arc(Direction(9, -7), Direction(2, -1)),
    ])


# =============================================================================
# Reference functions
# =============================================================================

def four_fan_hinge() -> HingeFunction:
    """|x|+|y|+|y-2x|+|2y-x|-|y-3x|-|3y-x|-1: four unbounded components."""
    return HingeFunction(
        AffineForm(0, 0, -1),
        (AffineForm(1, 0, 0), AffineForm(0, 1, 0), AffineForm(-2, 1, 0), AffineForm(-1, 2, 0)),
        (AffineForm(-3, 1, 0), AffineForm(-1, 3, 0)),
    )


def figure_hinge() -> HingeFunction:
    """x - 1 + |x-1| + |y| - |y-x|."""
    return HingeFunction(AffineForm(1, 0, -1), (AffineForm(1, 0, -1), AffineForm(0, 1, 0)), (AffineForm(-1, 1, 0),))


def max_xy0() -> PosHomCPWL:
    """max(x, y, 0): positively homogeneous, not a hinge function."""
    return PosHomCPWL.from_sectors(
        [Direction(1, 1), Direction(-1, 0), Direction(0, -1)],
        [Point2(0, 1), Point2(0, 0), Point2(1, 0)],
    )


# =============================================================================
# Polygons
# =============================================================================

def convex_hull(points: Sequence[Point2]) -> List[Point2]:
    """Strictly convex hull, counterclockwise (monotone chain)."""
    pts = sorted(set(points))
    if len(pts) < 3:
        return pts

    def half(seq):
        chain: List[Point2] = []
        for p in seq:
            while len(chain) >= 2 and (chain[-1] - chain[-2]).cross(p - chain[-1]) <= 0:
                chain.pop()
            chain.append(p)
        return chain

    lower, upper = half(pts), half(reversed(pts))
    return lower[:-1] + upper[:-1]


def random_convex_polygon(rng: random.Random, n: int = 5, bound: int = 6, attempts: int = 1000) -> List[Point2]:
    """Vertices of a random integer convex n-gon."""
    for _ in range(attempts):
        pts = [Point2(rng.randint(-bound, bound), rng.randint(-bound, bound)) for _ in range(3 * n)]
        hull = convex_hull(pts)
        if len(hull) == n:
            return hull
    raise RuntimeError(f"no convex {n}-gon drawn")
