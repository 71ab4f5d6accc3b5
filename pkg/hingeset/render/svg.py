"""SVG rendering of hinge functions and polytopal sets using drawsvg."""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

import drawsvg as draw

from hingeset.config import config
from hingeset.core.arrangement import Arrangement, build_arrangement, clip_polygon
from hingeset.core.errors import DegenerateInput
from hingeset.core.exact import AffineForm, Point2, to_rational
from hingeset.core.hinge import HingeFunction
from hingeset.core.planar import PointClass, PolytopalSet, PositivityResult, classify_point, positivity_set
from hingeset.logging_config import get_logger

logger = get_logger(__name__)

Segment = Tuple[Point2, Point2]


@dataclass(frozen=True)
class RenderSpec:
    viewbox: Tuple[Fraction, Fraction, Fraction, Fraction]
    width: int
    height: int
    fill: str
    valley_stroke: str
    mountain_stroke: str
    boundary_stroke: str
    significant_digits: int = 12

    def __post_init__(self):
        xmin, ymin, xmax, ymax = (to_rational(v) for v in self.viewbox)
        if xmin >= xmax or ymin >= ymax:
            raise DegenerateInput("viewbox must be nonempty", viewbox=[str(v) for v in self.viewbox])
        object.__setattr__(self, "viewbox", (xmin, ymin, xmax, ymax))

    @classmethod
    def from_config(cls, viewbox: Optional[Sequence] = None) -> "RenderSpec":
        render = config.RENDER
        return cls(
            viewbox=tuple(viewbox or render.VIEWBOX),
            width=render.WIDTH,
            height=render.HEIGHT,
            fill=render.FILL,
            valley_stroke=render.VALLEY_STROKE,
            mountain_stroke=render.MOUNTAIN_STROKE,
            boundary_stroke=render.BOUNDARY_STROKE,
            significant_digits=render.SIGNIFICANT_DIGITS,
        )

    def frame(self) -> List[Point2]:
        xmin, ymin, xmax, ymax = self.viewbox
        return [Point2(xmin, ymin), Point2(xmax, ymin), Point2(xmax, ymax), Point2(xmin, ymax)]

    def contains(self, p: Point2) -> bool:
        xmin, ymin, xmax, ymax = self.viewbox
        return xmin <= p.x <= xmax and ymin <= p.y <= ymax

    def frame_forms(self) -> List[AffineForm]:
        xmin, ymin, xmax, ymax = self.viewbox
        return [AffineForm(1, 0, -xmin), AffineForm(-1, 0, xmax), AffineForm(0, 1, -ymin), AffineForm(0, -1, ymax)]


def parse_viewbox(text: str) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
    """Parse "xmin,ymin,xmax,ymax" into four rationals."""
    parts = text.split(",")
    if len(parts) != 4:
        raise DegenerateInput("viewbox needs four comma-separated rationals", viewbox=text)
    return tuple(to_rational(p) for p in parts)


# =============================================================================
# Exact clipping to the viewbox
# =============================================================================

def clip_to_view(poly: Sequence[Point2], spec: RenderSpec) -> List[Point2]:
    out = list(poly)
    for form in spec.frame_forms():
        if len(out) < 3:
            return []
        out = clip_polygon(out, form, 1)
    return out if len(out) >= 3 else []


def clip_line(line: AffineForm, spec: RenderSpec, lo: Optional[Fraction] = None,
              hi: Optional[Fraction] = None) -> Optional[Segment]:
    """Part of the line (optionally restricted to a parameter range) inside the viewbox.

    Points are ``foot + t * (-b, a)``.
    """
    p0, d = line.foot(), Point2(-line.b, line.a)
    t_lo, t_hi = lo, hi
    for form in spec.frame_forms():
        v0, dv = form(p0), form.a * d.x + form.b * d.y
        if dv == 0:
            if v0 < 0:
                return None
            continue
        t = -v0 / dv
        if dv > 0:
            t_lo = t if t_lo is None else max(t_lo, t)
        else:
            t_hi = t if t_hi is None else min(t_hi, t)
    if t_lo is None or t_hi is None or t_lo >= t_hi:
        return None
    return p0 + d.scale(t_lo), p0 + d.scale(t_hi)


def line_parameter(line: AffineForm, p: Point2) -> Fraction:
    d = Point2(-line.b, line.a)
    return d.dot(p - line.foot()) / d.dot(d)


# =============================================================================
# Labeled regions
# =============================================================================

def positive_regions(arrangement: Arrangement, face_labels: Sequence[int], spec: RenderSpec) -> List[List[Point2]]:
    """Exact polygons of the positive faces, clipped to the viewbox."""
    regions = []
    for face, label in zip(arrangement.faces, face_labels):
        if label <= 0:
            continue
        clipped = clip_to_view(face.polygon, spec)
        if clipped:
            regions.append(clipped)
    return regions


def boundary_segments(arrangement: Arrangement, face_labels: Sequence[int], edge_labels: Sequence[int],
                      spec: RenderSpec) -> List[Segment]:
    """Edges outside the set with a positive face on at least one side."""
    segments = []
    for edge, label in zip(arrangement.edges, edge_labels):
        if label > 0:
            continue
        if face_labels[edge.positive_face] <= 0 and face_labels[edge.negative_face] <= 0:
            continue
        line = arrangement.lines[edge.line]
        lo = line_parameter(line, arrangement.vertices[edge.start].point) if edge.start is not None else None
        hi = line_parameter(line, arrangement.vertices[edge.end].point) if edge.end is not None else None
        segment = clip_line(line, spec, lo, hi)
        if segment:
            segments.append(segment)
    return segments


def set_labels(pset: PolytopalSet, arrangement: Arrangement) -> Tuple[List[int], List[int]]:
    """Face and edge labels of a polytopal set on an arrangement of its lines."""

    def label(p: Point2) -> int:
        return 1 if classify_point(pset, p) == PointClass.INTERIOR else -1

    return [label(f.sample) for f in arrangement.faces], [label(e.sample) for e in arrangement.edges]


# =============================================================================
# Drawing
# =============================================================================

class SvgCanvas:
    """drawsvg drawing in plane coordinates (y up)."""

    def __init__(self, spec: RenderSpec):
        self.spec = spec
        xmin, ymin, xmax, ymax = spec.viewbox
        self.drawing = draw.Drawing(
            self._num(xmax - xmin), self._num(ymax - ymin), origin=(self._num(xmin), self._num(-ymax))
        )
        self.drawing.set_render_size(spec.width, spec.height)

    def _num(self, value: Fraction) -> float:
        return float(f"{float(value):.{self.spec.significant_digits}g}")

    def _xy(self, p: Point2) -> Tuple[float, float]:
        return self._num(p.x), self._num(-p.y)

    def polygon(self, poly: Sequence[Point2], **attrs) -> None:
        coords = [c for p in poly for c in self._xy(p)]
        self.drawing.append(draw.Lines(*coords, close=True, **attrs))

    def segment(self, segment: Segment, **attrs) -> None:
        (x1, y1), (x2, y2) = self._xy(segment[0]), self._xy(segment[1])
        self.drawing.append(draw.Line(x1, y1, x2, y2, **attrs))

    def point(self, p: Point2, radius: float, **attrs) -> None:
        x, y = self._xy(p)
        self.drawing.append(draw.Circle(x, y, radius, **attrs))

    def as_svg(self) -> str:
        return self.drawing.as_svg()


def _stroke_width(spec: RenderSpec) -> float:
    xmin, _, xmax, _ = spec.viewbox
    return float(xmax - xmin) / 200


def _draw_labeled(canvas: SvgCanvas, arrangement: Arrangement, face_labels: Sequence[int],
                  edge_labels: Sequence[int]) -> None:
    spec = canvas.spec
    for poly in positive_regions(arrangement, face_labels, spec):
        canvas.polygon(poly, fill=spec.fill, stroke="none", class_="positive")
    width = _stroke_width(spec)
    for segment in boundary_segments(arrangement, face_labels, edge_labels, spec):
        canvas.segment(
            segment, stroke=spec.boundary_stroke, stroke_width=width,
            stroke_dasharray=f"{4 * width},{2 * width}", class_="boundary",
        )


def render_hinge(h: HingeFunction, spec: Optional[RenderSpec] = None) -> str:
    """Positivity set filled, valleys and mountains stroked, set boundary dashed."""
    spec = spec or RenderSpec.from_config()
    result = positivity_set(h)
    canvas = SvgCanvas(spec)
    _draw_labeled(canvas, result.arrangement, result.face_labels, result.edge_labels)
    width = _stroke_width(spec)
    for cls, stroke, lines in (
        ("valley", spec.valley_stroke, h.valleys()),
        ("mountain", spec.mountain_stroke, h.mountains()),
    ):
        for line in lines:
            segment = clip_line(line, spec)
            if segment:
                canvas.segment(segment, stroke=stroke, stroke_width=width, class_=cls)
    logger.debug("rendered hinge with %d break lines", len(h.break_lines()))
    return canvas.as_svg()


def render_set(pset: PolytopalSet, spec: Optional[RenderSpec] = None) -> str:
    spec = spec or RenderSpec.from_config()
    arrangement = build_arrangement(pset.lines())
    face_labels, edge_labels = set_labels(pset, arrangement)
    canvas = SvgCanvas(spec)
    _draw_labeled(canvas, arrangement, face_labels, edge_labels)
    return canvas.as_svg()


def render_arrangement(result: PositivityResult, spec: Optional[RenderSpec] = None) -> str:
    """Labeled arrangement: every line drawn thin, zero vertices marked."""
    spec = spec or RenderSpec.from_config()
    canvas = SvgCanvas(spec)
    _draw_labeled(canvas, result.arrangement, result.face_labels, result.edge_labels)
    width = _stroke_width(spec)
    for line in result.arrangement.lines:
        segment = clip_line(line, spec)
        if segment:
            canvas.segment(segment, stroke=spec.boundary_stroke, stroke_width=width / 2,
                           stroke_opacity=0.4, class_="arrangement")
    for vertex, label in zip(result.arrangement.vertices, result.vertex_labels):
        if label == 0 and spec.contains(vertex.point):
            canvas.point(vertex.point, 2 * width, fill=spec.boundary_stroke, class_="zero")
    return canvas.as_svg()


def render(target: Union[HingeFunction, PolytopalSet, PositivityResult], spec: Optional[RenderSpec] = None) -> str:
    if isinstance(target, HingeFunction):
        return render_hinge(target, spec)
    if isinstance(target, PositivityResult):
        return render_arrangement(target, spec)
    return render_set(target, spec)
