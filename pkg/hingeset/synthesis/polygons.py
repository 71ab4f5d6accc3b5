"""
Hinge functions for convex polygons and for the complement of a polygon's boundary.

Every function returned here has been verified on the arrangement oracle.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator, List, Optional, Sequence, Tuple

from hingeset.config import config
from hingeset.core.arrangement import box, build_arrangement, clip_polygon
from hingeset.core.cones import cone_from_predicate
from hingeset.core.errors import (
    ConstructionFailed,
    DegenerateInput,
    DegenerateTriangle,
    EpsilonSearchExhausted,
    InternalInconsistency,
)
from hingeset.core.exact import (
    AffineForm,
    AffineMap,
    Direction,
    Point2,
    centroid,
    pseudo_angle,
)
from hingeset.core.hinge import HingeFunction, hinge_of_half_plane, min_hinge, ramp
from hingeset.core.planar import ConvexCell, PolytopalSet, positivity_set, set_equal
from hingeset.logging_config import get_logger

from .coefficients import coefficient_space, hinge_from_coefficients
from .cone_synthesis import synthesize_cone

logger = get_logger(__name__)


def _reference_triangle_hinge() -> HingeFunction:
    """x + y - 2|x-y| - |2x+y-2| - |x+2y-2| + 2|x-1| + 2|y-1|, positive on (0,0),(2,0),(0,2)."""
    return HingeFunction.from_terms(
        AffineForm(1, 1, 0),
        [
            (-2, AffineForm(1, -1, 0)),
            (-1, AffineForm(2, 1, -2)),
            (-1, AffineForm(1, 2, -2)),
            (2, AffineForm(1, 0, -1)),
            (2, AffineForm(0, 1, -1)),
        ],
    )


REFERENCE_TRIANGLE = _reference_triangle_hinge()


# =============================================================================
# Polygon geometry
# =============================================================================

def convex_cell_from_vertices(points: Sequence[Point2]) -> ConvexCell:
    """Open convex polygon with the given vertices, in any order."""
    pts = list(dict.fromkeys(points))
    if len(pts) < 3 or len(pts) != len(points):
        raise DegenerateInput("a polygon needs at least three distinct vertices", count=len(points))
    c = centroid(pts)
    if c in pts:
        raise DegenerateInput("vertices are not in strictly convex position", vertex=str(c))
    pts.sort(key=lambda p: pseudo_angle((p - c).x, (p - c).y))
    n = len(pts)
    for i in range(n):
        a, b, d = pts[i], pts[(i + 1) % n], pts[(i + 2) % n]
        if (b - a).cross(d - b) <= 0:
            raise DegenerateInput("vertices are not in strictly convex position", vertex=str(b))
    return ConvexCell(tuple(AffineForm.through(pts[i], pts[(i + 1) % n]) for i in range(n)), c)


@dataclass
class PolygonOutline:
    """Boundary of a convex cell.

    For unbounded cells the boundary runs in from infinity along
    ``incoming`` (pointing away from the first vertex), through the
    vertices, and out along ``outgoing`` from the last vertex.
    """

    vertices: List[Point2]
    bounded: bool
    supporting: List[AffineForm]
    incoming: Optional[Direction] = None
    outgoing: Optional[Direction] = None


def polygon_outline(cell: ConvexCell) -> PolygonOutline:
    bound = build_arrangement(cell.constraints).bound
    poly = box(bound)
    for e in cell.constraints:
        poly = clip_polygon(poly, e, 1)

    def on_frame(p: Point2) -> bool:
        return abs(p.x) == bound or abs(p.y) == bound

    supporting = [e for e in cell.constraints if sum(1 for p in poly if e(p) == 0) >= 2]
    if not any(on_frame(p) for p in poly):
        return PolygonOutline(list(poly), True, supporting)

    n = len(poly)
    starts = [i for i in range(n) if not on_frame(poly[i]) and on_frame(poly[i - 1])]
    if not starts:
        return PolygonOutline([], False, supporting)
    if len(starts) > 1:
        raise InternalInconsistency("convex cell boundary has several vertex chains")
    i = starts[0]
    chain = []
    while not on_frame(poly[i % n]):
        chain.append(poly[i % n])
        i += 1
    f_in, f_out = poly[(starts[0] - 1) % n], poly[i % n]
    incoming = Direction.of(f_in - chain[0])
    outgoing = Direction.of(f_out - chain[-1])
    return PolygonOutline(chain, False, supporting, incoming, outgoing)


def _verify(h: HingeFunction, cell: ConvexCell) -> bool:
    return set_equal(positivity_set(h).set, PolytopalSet((cell,))).equal


# =============================================================================
# Triangles
# =============================================================================

def synthesize_triangle(v1: Point2, v2: Point2, v3: Point2) -> HingeFunction:
    """Pull back the reference triangle hinge along (0,0),(2,0),(0,2) -> v1,v2,v3."""
    m11, m21 = (v2.x - v1.x) / 2, (v2.y - v1.y) / 2
    m12, m22 = (v3.x - v1.x) / 2, (v3.y - v1.y) / 2
    transform = AffineMap(m11, m12, m21, m22, v1.x, v1.y)
    if transform.det == 0:
        raise DegenerateTriangle("triangle vertices are collinear", vertices=[str(v1), str(v2), str(v3)])
    h = REFERENCE_TRIANGLE.compose(transform.inverse())
    cell = convex_cell_from_vertices([v1, v2, v3])
    if not _verify(h, cell):
        raise InternalInconsistency("pulled-back triangle hinge fails verification")
    return h


# =============================================================================
# Candidates from coefficient spaces
# =============================================================================

def _candidate_vectors(basis: List[List[Fraction]]) -> Iterator[List[Fraction]]:
    yield from basis
    if len(basis) < 2 or len(basis) > 3:
        return
    r = config.SYNTHESIS.CANDIDATE_RANGE
    for coeffs in product(range(-r, r + 1), repeat=len(basis)):
        if sum(1 for c in coeffs if c != 0) < 2:
            continue
        yield [sum((c * v[k] for c, v in zip(coeffs, basis)), Fraction(0)) for k in range(len(basis[0]))]


def _oriented_candidates(lines: List[AffineForm], zero_points: List[Point2], inside: Point2) -> Iterator[HingeFunction]:
    for vector in _candidate_vectors(coefficient_space(lines, zero_points)):
        g = hinge_from_coefficients(lines, vector)
        value = g.evaluate(inside)
        if value == 0:
            continue
        yield g if value > 0 else g.scale(-1)


# =============================================================================
# Bounded polygons with more than three vertices
# =============================================================================

def _supporting_form(vertices: List[Point2], k: int) -> AffineForm:
    """Line through vertices[k] positive on the rest of the polygon."""
    n = len(vertices)
    prev, w0, nxt = vertices[k - 1], vertices[k], vertices[(k + 1) % n]
    a, b = w0 - prev, nxt - w0
    normal = Point2(-a.y - b.y, a.x + b.x)
    return AffineForm(normal.x, normal.y, -normal.dot(w0))


def ramp_weight(g: HingeFunction, support: AffineForm) -> Optional[Fraction]:
    """A safe N with g + N*min(H, 0) < 0 wherever H < 0.

    Returns None if g is positive somewhere on the line H = 0 or grows
    along it, where no N helps.
    """
    arrangement = build_arrangement(g.break_lines() + [support])
    worst = Fraction(0)
    for face in arrangement.faces:
        if support(face.sample) > 0:
            continue
        for p in face.polygon:
            hp, gp = support(p), g.evaluate(p)
            if hp < 0:
                worst = max(worst, gp / -hp)
            elif gp > 0:
                return None
        grad = g.gradient_at(face.sample)
        for d in face.recession:
            hd, gd = support.linear_dot(d), grad.x * d.dx + grad.y * d.dy
            if hd < 0:
                worst = max(worst, gd / -hd)
            elif hd == 0 and gd > 0:
                return None
    return worst + 1


def _bounded_polygon(vertices: List[Point2], cell: ConvexCell) -> HingeFunction:
    n = len(vertices)
    inside = cell.witness
    for k in range(n):
        w = vertices[k:] + vertices[:k]
        lines = [AffineForm.through(w[0], w[j]) for j in range(2, n - 1)]
        lines.append(AffineForm.through(w[1], w[n - 1]))
        support = _supporting_form(vertices, k)
        for g in _oriented_candidates(lines, list(w), inside):
            weight = ramp_weight(g, support)
            if weight is None:
                logger.debug("candidate rejected at apex %s: unbounded on the support line", w[0])
                continue
            h = g - ramp(support).scale(weight)
            if _verify(h, cell):
                logger.info("bounded %d-gon synthesized at apex %s with N=%s", n, w[0], weight)
                return h
            logger.debug("candidate rejected at apex %s: verification failed", w[0])
    raise ConstructionFailed("no sign-feasible candidate for the bounded polygon", vertices=n)


# =============================================================================
# Unbounded polygons
# =============================================================================

def _parallel_valleys(outline: PolygonOutline, cell: ConvexCell) -> HingeFunction:
    a, b = outline.incoming, outline.outgoing
    if a.cross(b) == 0:
        raise ConstructionFailed("unbounded polygon with parallel boundary rays", incoming=[a.dx, a.dy])
    r = Direction.from_vector(a.dx + b.dx, a.dy + b.dy)
    lines = [AffineForm(-r.dy, r.dx, r.dy * u.x - r.dx * u.y) for u in outline.vertices]
    zero_points = list(outline.vertices) + [outline.vertices[0] + a.vec(), outline.vertices[-1] + b.vec()]
    for g in _oriented_candidates(lines, zero_points, cell.witness):
        if _verify(g, cell):
            logger.info("unbounded polygon with %d vertices synthesized", len(outline.vertices))
            return g
    raise ConstructionFailed("no sign-feasible candidate for the unbounded polygon", vertices=len(outline.vertices))


def _translated_cone(apex: Point2, cell: ConvexCell) -> HingeFunction:
    active = [e for e in cell.constraints if e(apex) == 0]
    cone = cone_from_predicate([e.direction() for e in active], lambda d: all(e.linear_dot(d) > 0 for e in active))
    return synthesize_cone(cone).compose(AffineMap.translation(-apex))


def synthesize_convex_polygon(cell: ConvexCell) -> HingeFunction:
    """Verified hinge function positive exactly on the open convex cell."""
    outline = polygon_outline(cell)
    if outline.bounded:
        if len(outline.vertices) == 3:
            return synthesize_triangle(*outline.vertices)
        return _bounded_polygon(outline.vertices, cell)

    m = len(outline.vertices)
    if m == 0:
        if len(outline.supporting) == 1:
            h = hinge_of_half_plane(outline.supporting[0])
        elif len(outline.supporting) == 2:
            h = min_hinge(*outline.supporting)
        else:
            raise DegenerateInput("unbounded cell without vertices must be a half-plane or a strip")
    elif m == 1:
        h = _translated_cone(outline.vertices[0], cell)
    else:
        return _parallel_valleys(outline, cell)

    if not _verify(h, cell):
        raise InternalInconsistency("polygon hinge fails verification", vertices=m)
    return h


# =============================================================================
# Complement of the boundary
# =============================================================================

def boundary_complement_set(cell: ConvexCell, supporting: Sequence[AffineForm]) -> PolytopalSet:
    """The plane minus the boundary of the cell."""
    outside = tuple(ConvexCell((-e,)) for e in supporting)
    return PolytopalSet((cell,) + outside)


def synthesize_boundary_complement(cell: ConvexCell) -> Tuple[HingeFunction, Fraction]:
    """h = f + eps*g with f the sum of edge ramps and g the polygon hinge.

    Returns h and the epsilon found by halving.
    """
    outline = polygon_outline(cell)
    f = HingeFunction.constant(0)
    for e in outline.supporting:
        f = f + ramp(e)
    g = synthesize_convex_polygon(cell)
    target = boundary_complement_set(cell, outline.supporting)

    eps = Fraction(1)
    for _ in range(config.SYNTHESIS.EPSILON_HALVINGS + 1):
        h = f + g.scale(eps)
        if set_equal(positivity_set(h).set, target).equal:
            logger.info("boundary complement found with epsilon=%s", eps)
            return h, eps
        eps /= 2
    raise EpsilonSearchExhausted(
        "no epsilon found for the boundary complement",
        halvings=config.SYNTHESIS.EPSILON_HALVINGS,
    )
