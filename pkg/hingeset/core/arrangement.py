"""
Exact planar line arrangements.

Faces are computed by clipping a square frame, one line at a time, so
each face carries its clipped polygon, an interior sample (the vertex
centroid) and its sign vector. The frame is chosen beyond every vertex
and every line's closest point to the origin, so a face is unbounded
exactly when its clipped polygon touches the frame.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from hingeset.logging_config import get_logger

from .errors import InternalInconsistency
from .exact import AffineForm, Direction, Point2, centroid, intersect, midpoint

logger = get_logger(__name__)

Polygon = List[Point2]


# =============================================================================
# Polygon helpers
# =============================================================================

def polygon_area2(poly: Sequence[Point2]) -> Fraction:
    """Twice the signed area (positive for counterclockwise order)."""
    total = Fraction(0)
    n = len(poly)
    for i in range(n):
        total += poly[i].cross(poly[(i + 1) % n])
    return total


def clip_polygon(poly: Sequence[Point2], form: AffineForm, sign: int) -> Polygon:
    """Part of a convex polygon where sign * form >= 0."""
    out: Polygon = []
    n = len(poly)
    for i in range(n):
        p, q = poly[i], poly[(i + 1) % n]
        vp, vq = sign * form(p), sign * form(q)
        if vp >= 0:
            out.append(p)
        if (vp > 0 and vq < 0) or (vp < 0 and vq > 0):
            t = vp / (vp - vq)
            out.append(p + (q - p).scale(t))
    deduped: Polygon = []
    for p in out:
        if not deduped or deduped[-1] != p:
            deduped.append(p)
    if len(deduped) > 1 and deduped[0] == deduped[-1]:
        deduped.pop()
    return deduped


def box(bound: Fraction) -> Polygon:
    return [Point2(-bound, -bound), Point2(bound, -bound), Point2(bound, bound), Point2(-bound, bound)]


def recession_generators(constraints: Sequence[AffineForm]) -> List[Direction]:
    """Directions generating {d : grad(E).d >= 0 for every constraint E}.

    Extreme rays are perpendiculars of the constraint normals; the normals
    themselves cover half-planes. With no constraints the axes are used.
    """
    normals = [Direction.from_vector(e.a, e.b) for e in constraints if not e.is_constant()]
    if not normals:
        return [Direction(1, 0), Direction(0, 1), Direction(-1, 0), Direction(0, -1)]
    found: List[Direction] = []
    for n in normals:
        for d in (n.perp_ccw(), n.perp_cw(), n):
            if d not in found and all(m.dot(d) >= 0 for m in normals):
                found.append(d)
    return found


# =============================================================================
# Records
# =============================================================================

@dataclass
class Face:
    signs: Tuple[int, ...]
    polygon: Polygon
    sample: Point2
    bounded: bool
    bounding_lines: Tuple[int, ...]
    constraints: Tuple[AffineForm, ...]
    recession: Tuple[Direction, ...]


@dataclass
class Edge:
    line: int
    sample: Point2
    start: Optional[int]
    end: Optional[int]
    positive_face: int
    negative_face: int

    @property
    def bounded(self) -> bool:
        return self.start is not None and self.end is not None


@dataclass
class Vertex:
    point: Point2
    lines: Tuple[int, ...]
    faces: Tuple[int, ...] = ()
    edges: Tuple[int, ...] = ()


@dataclass
class Arrangement:
    lines: List[AffineForm]
    vertices: List[Vertex]
    edges: List[Edge]
    faces: List[Face]
    bound: Fraction
    _face_index: Dict[Tuple[int, ...], int] = field(default_factory=dict, repr=False)

    def signs_at(self, p: Point2) -> Tuple[int, ...]:
        out = []
        for line in self.lines:
            v = line(p)
            out.append((v > 0) - (v < 0))
        return tuple(out)

    def face_of(self, p: Point2) -> Optional[int]:
        """Index of the face containing p, or None when p lies on a line."""
        signs = self.signs_at(p)
        if 0 in signs:
            return None
        return self._face_index.get(signs)

    def face_by_signs(self, signs: Tuple[int, ...]) -> Optional[int]:
        return self._face_index.get(signs)

    def samples(self) -> List[Point2]:
        """One sample per face, edge and vertex."""
        return [f.sample for f in self.faces] + [e.sample for e in self.edges] + [v.point for v in self.vertices]

    def frame_points(self) -> List[Point2]:
        b = self.bound
        pts = {p for f in self.faces for p in f.polygon if abs(p.x) == b or abs(p.y) == b}
        pts.update(box(b))
        return sorted(pts)

    def euler_characteristic(self) -> int:
        """V - E + F of the subdivision closed by the frame (2 for a valid build)."""
        frame = len(self.frame_points())
        v = len(self.vertices) + frame
        e = len(self.edges) + frame
        f = len(self.faces) + 1
        return v - e + f


def face_nonnegative(face: Face, form: AffineForm) -> bool:
    """form >= 0 on the closure of the face."""
    if any(form(p) < 0 for p in face.polygon):
        return False
    return all(form.linear_dot(d) >= 0 for d in face.recession)


def face_nonpositive(face: Face, form: AffineForm) -> bool:
    return face_nonnegative(face, -form)


# =============================================================================
# Construction
# =============================================================================

def distinct_lines(forms: Sequence[AffineForm]) -> List[AffineForm]:
    """Primitive representatives of the nonconstant forms, sorted."""
    return sorted({f.primitive() for f in forms if not f.is_constant()}, key=lambda f: f.key())


def build_arrangement(forms: Sequence[AffineForm]) -> Arrangement:
    lines = distinct_lines(forms)

    points = set()
    for l1, l2 in combinations(lines, 2):
        if l1.a * l2.b - l1.b * l2.a != 0:
            points.add(intersect(l1, l2))
    vertex_points = sorted(points)

    magnitude = Fraction(0)
    for p in vertex_points + [l.foot() for l in lines]:
        magnitude = max(magnitude, abs(p.x), abs(p.y))
    bound = 2 * magnitude + 1

    # faces
    pieces: List[Tuple[Tuple[int, ...], Polygon]] = [((), box(bound))]
    for line in lines:
        refined = []
        for signs, poly in pieces:
            for s in (1, -1):
                part = clip_polygon(poly, line, s)
                if len(part) >= 3 and polygon_area2(part) > 0:
                    refined.append((signs + (s,), part))
        pieces = refined

    faces: List[Face] = []
    face_index: Dict[Tuple[int, ...], int] = {}
    for signs, poly in pieces:
        bounded = not any(abs(p.x) == bound or abs(p.y) == bound for p in poly)
        bounding = []
        for i, line in enumerate(lines):
            if sum(1 for p in poly if line(p) == 0) >= 2:
                bounding.append(i)
        constraints = tuple(lines[i].scale(signs[i]) for i in bounding)
        recession = () if bounded else tuple(recession_generators(constraints))
        face_index[signs] = len(faces)
        faces.append(Face(signs, poly, centroid(poly), bounded, tuple(bounding), constraints, recession))

    vertices = [
        Vertex(p, tuple(i for i, l in enumerate(lines) if l(p) == 0))
        for p in vertex_points
    ]
    vertex_lookup = {v.point: k for k, v in enumerate(vertices)}

    # edges
    edges: List[Edge] = []
    for i, line in enumerate(lines):
        d = Point2(-line.b, line.a)
        on_line = sorted((v.point for v in vertices if i in v.lines), key=lambda p: d.dot(p))
        spans: List[Tuple[Optional[Point2], Optional[Point2], Point2]] = []
        if not on_line:
            spans.append((None, None, line.foot()))
        else:
            spans.append((None, on_line[0], on_line[0] - d))
            for p, q in zip(on_line, on_line[1:]):
                spans.append((p, q, midpoint(p, q)))
            spans.append((on_line[-1], None, on_line[-1] + d))
        for start, end, sample in spans:
            signs = list(_signs(lines, sample))
            signs[i] = 1
            pos = face_index.get(tuple(signs))
            signs[i] = -1
            neg = face_index.get(tuple(signs))
            if pos is None or neg is None:
                raise InternalInconsistency("edge without two adjacent faces", line=i)
            edges.append(
                Edge(
                    i,
                    sample,
                    vertex_lookup[start] if start is not None else None,
                    vertex_lookup[end] if end is not None else None,
                    pos,
                    neg,
                )
            )

    for k, v in enumerate(vertices):
        v.faces = tuple(j for j, f in enumerate(faces) if v.point in f.polygon)
        v.edges = tuple(j for j, e in enumerate(edges) if e.start == k or e.end == k)

    arrangement = Arrangement(lines, vertices, edges, faces, bound, face_index)
    chi = arrangement.euler_characteristic()
    if chi != 2:
        raise InternalInconsistency(f"arrangement fails the Euler relation: {chi}", euler=chi)
    logger.debug(
        "arrangement: %d lines, %d vertices, %d edges, %d faces",
        len(lines), len(vertices), len(edges), len(faces),
    )
    return arrangement


def _signs(lines: Sequence[AffineForm], p: Point2) -> Tuple[int, ...]:
    return tuple((l(p) > 0) - (l(p) < 0) for l in lines)
