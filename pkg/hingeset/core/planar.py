"""
Polytopal sets in the plane and the arrangement oracle.

Every decision here is made on the samples of an exact line
arrangement: membership is constant on each face, edge and vertex of the
arrangement of all defining lines, so comparing one sample per cell of
that arrangement decides set equality exactly.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

from hingeset.config import config
from hingeset.logging_config import get_logger

from .arrangement import Arrangement, build_arrangement, face_nonnegative, face_nonpositive
from .cones import (
    ARCS,
    FULL,
    PolytopalCone,
    RealizabilityVerdict,
    check_cone_condition,
    cone_from_predicate,
)
from .errors import EmptyCell, InternalInconsistency
from .exact import AffineForm, Direction, Point2, arc_half_turn_compare
from .hinge import HingeFunction

logger = get_logger(__name__)


class PointClass(str, Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    EXTERIOR = "exterior"


def _oriented_key(form: AffineForm) -> Tuple[AffineForm, int]:
    prim = form.primitive()
    ratio_sign = 1 if (form.a * prim.a + form.b * prim.b + form.c * prim.c) > 0 else -1
    return prim, ratio_sign


@dataclass(frozen=True)
class ConvexCell:
    """Open convex polygon {p : E(p) > 0 for every constraint E}."""

    constraints: Tuple[AffineForm, ...]
    witness: Optional[Point2] = field(default=None, compare=False)

    def __post_init__(self):
        kept: List[AffineForm] = []
        seen = set()
        for form in self.constraints:
            if form.is_constant():
                if form.c > 0:
                    continue
                raise EmptyCell("constant constraint is never positive", constant=str(form.c))
            key = _oriented_key(form)
            if key in seen:
                continue
            seen.add(key)
            kept.append(form)
        object.__setattr__(self, "constraints", tuple(kept))
        if self.witness is not None and self.contains(self.witness):
            return
        arrangement = build_arrangement(kept)
        for face in arrangement.faces:
            if self.contains(face.sample):
                object.__setattr__(self, "witness", face.sample)
                return
        raise EmptyCell("constraints have no common interior point", constraints=len(kept))

    def contains(self, p: Point2) -> bool:
        return all(e(p) > 0 for e in self.constraints)

    def closure_contains(self, p: Point2) -> bool:
        return all(e(p) >= 0 for e in self.constraints)


@dataclass(frozen=True)
class PolytopalSet:
    cells: Tuple[ConvexCell, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "cells", tuple(self.cells))

    @property
    def is_empty(self) -> bool:
        return not self.cells

    def lines(self) -> List[AffineForm]:
        return [e for c in self.cells for e in c.constraints]

    def union(self, other: "PolytopalSet") -> "PolytopalSet":
        return PolytopalSet(self.cells + other.cells)


def classify_point(pset: PolytopalSet, p: Point2) -> PointClass:
    if any(c.contains(p) for c in pset.cells):
        return PointClass.INTERIOR
    if any(c.closure_contains(p) for c in pset.cells):
        return PointClass.BOUNDARY
    return PointClass.EXTERIOR


# =============================================================================
# Positivity sets
# =============================================================================

@dataclass
class PositivityResult:
    """Positivity set with the labeled refinement arrangement it came from.

    Labels are +1, 0 or -1: the sign of h on each face, edge and vertex.
    """

    set: PolytopalSet
    arrangement: Arrangement
    face_labels: List[int]
    edge_labels: List[int]
    vertex_labels: List[int]


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def positivity_set(h: HingeFunction) -> PositivityResult:
    """Exact positivity set of h.

    The break-line arrangement is refined by the zero line of h on every
    face it crosses, after which h has constant sign on each face, edge
    and vertex. Positive faces, edges and vertices each emit one cell.
    """
    coarse = build_arrangement(h.break_lines())
    zero_lines: List[AffineForm] = []
    for face in coarse.faces:
        local = h.local_affine(h.sign_vector(face.sample))
        if local.is_constant():
            continue
        if not face_nonnegative(face, local) and not face_nonpositive(face, local):
            zero_lines.append(local)
    arrangement = build_arrangement(h.break_lines() + zero_lines)

    face_labels = [_sign(h.evaluate(f.sample)) for f in arrangement.faces]
    edge_labels = [_sign(h.evaluate(e.sample)) for e in arrangement.edges]
    vertex_labels = [_sign(h.evaluate(v.point)) for v in arrangement.vertices]

    cells: List[ConvexCell] = []
    for face, label in zip(arrangement.faces, face_labels):
        if label > 0:
            cells.append(ConvexCell(face.constraints, face.sample))
    for edge, label in zip(arrangement.edges, edge_labels):
        if label <= 0:
            continue
        if face_labels[edge.positive_face] <= 0 or face_labels[edge.negative_face] <= 0:
            raise InternalInconsistency("positive edge between non-positive faces", edge=edge.line)
        shared = {edge.line}
        cells.append(ConvexCell(_merged_constraints(arrangement, (edge.positive_face, edge.negative_face), shared), edge.sample))
    for vertex, label in zip(arrangement.vertices, vertex_labels):
        if label <= 0:
            continue
        if any(face_labels[f] <= 0 for f in vertex.faces):
            raise InternalInconsistency("positive vertex next to a non-positive face", vertex=str(vertex.point))
        cells.append(ConvexCell(_merged_constraints(arrangement, vertex.faces, set(vertex.lines)), vertex.point))

    logger.debug("positivity set: %d cells from %d faces", len(cells), len(arrangement.faces))
    return PositivityResult(PolytopalSet(tuple(cells)), arrangement, face_labels, edge_labels, vertex_labels)


def _merged_constraints(arrangement: Arrangement, faces: Sequence[int], skip_lines: set) -> Tuple[AffineForm, ...]:
    out: List[AffineForm] = []
    for f in faces:
        face = arrangement.faces[f]
        for line, form in zip(face.bounding_lines, face.constraints):
            if line not in skip_lines:
                out.append(form)
    return tuple(out)


# =============================================================================
# Comparison and components
# =============================================================================

@dataclass
class SetComparison:
    equal: bool
    counterexample: Optional[Point2] = None
    left: Optional[PointClass] = None
    right: Optional[PointClass] = None

    def __bool__(self) -> bool:
        return self.equal


def set_equal(p1: PolytopalSet, p2: PolytopalSet) -> SetComparison:
    arrangement = build_arrangement(p1.lines() + p2.lines())
    for p in arrangement.samples():
        c1, c2 = classify_point(p1, p), classify_point(p2, p)
        if c1 != c2:
            logger.debug("sets differ at %s: %s vs %s", p, c1.value, c2.value)
            return SetComparison(False, p, c1, c2)
    return SetComparison(True)


def functions_equal(h1: HingeFunction, h2: HingeFunction) -> Optional[Point2]:
    """None if h1 and h2 agree everywhere, else a face sample where they differ.

    Both are affine on every face of the joint break-line arrangement, so
    comparing the local affine forms face by face is exact.
    """
    arrangement = build_arrangement(h1.break_lines() + h2.break_lines())
    for face in arrangement.faces:
        p = face.sample
        if h1.local_affine(h1.sign_vector(p)) != h2.local_affine(h2.sign_vector(p)):
            return p
    return None


@dataclass
class Component:
    faces: Tuple[int, ...]
    cells: Tuple[int, ...]
    bounded: bool


@dataclass
class ComponentReport:
    components: List[Component]

    @property
    def count(self) -> int:
        return len(self.components)

    @property
    def bounded(self) -> List[bool]:
        return [c.bounded for c in self.components]


def connected_components(pset: PolytopalSet) -> ComponentReport:
    """Components of the union, gluing interior faces across interior edges."""
    arrangement = build_arrangement(pset.lines())
    inside = [classify_point(pset, f.sample) == PointClass.INTERIOR for f in arrangement.faces]
    parent = list(range(len(arrangement.faces)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for edge in arrangement.edges:
        if classify_point(pset, edge.sample) != PointClass.INTERIOR:
            continue
        a, b = find(edge.positive_face), find(edge.negative_face)
        if a != b:
            parent[max(a, b)] = min(a, b)

    groups: Dict[int, List[int]] = {}
    for i, flag in enumerate(inside):
        if flag:
            groups.setdefault(find(i), []).append(i)

    components = []
    for root in sorted(groups):
        faces = groups[root]
        cells = tuple(
            k for k, cell in enumerate(pset.cells)
            if any(cell.contains(arrangement.faces[f].sample) for f in faces)
        )
        bounded = all(arrangement.faces[f].bounded for f in faces)
        components.append(Component(tuple(faces), cells, bounded))
    return ComponentReport(components)


# =============================================================================
# Local cones and the local condition
# =============================================================================

def local_cone(pset: PolytopalSet, q: Point2) -> PolytopalCone:
    """Directions along which the set is entered from q."""
    active_sets: List[List[AffineForm]] = []
    for cell in pset.cells:
        if not cell.closure_contains(q):
            continue
        active_sets.append([e for e in cell.constraints if e(q) == 0])
    if not active_sets:
        return PolytopalCone.empty()

    critical = [e.direction() for active in active_sets for e in active]

    def enters(d: Direction) -> bool:
        return any(all(e.linear_dot(d) > 0 for e in active) for active in active_sets)

    return cone_from_predicate(critical, enters)


def boundary_vertices(pset: PolytopalSet) -> List[Point2]:
    arrangement = build_arrangement(pset.lines())
    return [v.point for v in arrangement.vertices if classify_point(pset, v.point) == PointClass.BOUNDARY]


@dataclass
class LocalConditionReport:
    passed: bool
    checked: int
    point: Optional[Point2] = None
    verdict: Optional[RealizabilityVerdict] = None


def check_local_condition(pset: PolytopalSet, workers: Optional[int] = None) -> LocalConditionReport:
    """Run the cone criterion on the local cone at every boundary vertex.

    Reports the first failing vertex in vertex order.
    """
    points = boundary_vertices(pset)
    workers = workers or config.SYNTHESIS.WORKERS

    def verdict_at(q: Point2) -> RealizabilityVerdict:
        return check_cone_condition(local_cone(pset, q))

    if workers > 1 and len(points) > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            verdicts = list(executor.map(verdict_at, points))
    else:
        verdicts = [verdict_at(q) for q in points]

    for q, verdict in zip(points, verdicts):
        if not verdict.realizable:
            logger.info("local condition fails at %s (%s span)", q, verdict.g_span.kind)
            return LocalConditionReport(False, len(points), q, verdict)
    return LocalConditionReport(True, len(points))


# =============================================================================
# Cones as sets
# =============================================================================

def cone_to_set(cone: PolytopalCone, apex: Point2 = Point2(0, 0)) -> PolytopalSet:
    """The cone (translated to apex) as a union of convex cells.

    Arcs shorter than a half-turn give one cell, a half-turn gives a
    half-plane, longer arcs give two overlapping half-planes, and the
    circle minus one ray gives three.
    """
    if cone.kind == FULL:
        return PolytopalSet((ConvexCell((), apex),))
    if cone.kind != ARCS:
        return PolytopalSet()

    def through(n: Direction) -> AffineForm:
        return AffineForm(n.dx, n.dy, -(n.dx * apex.x + n.dy * apex.y))

    cells: List[ConvexCell] = []
    for arc in cone.arcs:
        s, e = arc.start, arc.end
        left_of_start = through(s.perp_ccw())
        right_of_end = through(e.perp_cw())
        if s == e:
            cells.append(ConvexCell((left_of_start,)))
            cells.append(ConvexCell((right_of_end,)))
            cells.append(ConvexCell((through(-s),)))
            continue
        cmp = arc_half_turn_compare(s, e)
        if cmp < 0:
            cells.append(ConvexCell((left_of_start, right_of_end)))
        elif cmp == 0:
            cells.append(ConvexCell((left_of_start,)))
        else:
            cells.append(ConvexCell((left_of_start,)))
            cells.append(ConvexCell((right_of_end,)))
    return PolytopalSet(tuple(cells))
