"""
Schema and Pydantic Models for hingeset JSON.

Rationals travel as canonical "p/q" strings (integers as "p"), directions
as two-element integer arrays and points as two-element arrays of
rational strings. Every model converts to and from the exact core types.
"""

import json
from fractions import Fraction
from typing import Annotated, Any, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, PlainSerializer, PlainValidator

from hingeset.core.arrangement import Arrangement
from hingeset.core.cones import (
    ARCS,
    EMPTY,
    FULL,
    Arc,
    GSpan,
    PolytopalCone,
    RealizabilityVerdict,
    normalize_cone,
)
from hingeset.core.errors import HingeSetError, SchemaError
from hingeset.core.exact import AffineForm, Direction, Point2, format_rational, to_rational
from hingeset.core.hinge import HingeFunction
from hingeset.core.planar import (
    ComponentReport,
    ConvexCell,
    LocalConditionReport,
    PolytopalSet,
    PositivityResult,
    SetComparison,
)
from hingeset.synthesis.cone_synthesis import SymmetricProfile, SynthesisFrame
from hingeset.synthesis.polygons import convex_cell_from_vertices


def _parse_rational(value: Any) -> Fraction:
    if isinstance(value, float):
        raise ValueError("floats are not exact; use a \"p/q\" string")
    try:
        return to_rational(value)
    except HingeSetError as e:
        raise ValueError(e.message) from e


def _parse_direction(value: Any) -> Direction:
    if isinstance(value, Direction):
        return value
    if not isinstance(value, (list, tuple)) or len(value) != 2:
        raise ValueError("a direction is a two-element integer array")
    if not all(isinstance(v, int) and not isinstance(v, bool) for v in value):
        raise ValueError("direction entries must be integers")
    try:
        return Direction(value[0], value[1])
    except HingeSetError as e:
        raise ValueError(e.message) from e


def _parse_point(value: Any) -> Point2:
    if isinstance(value, Point2):
        return value
    if not isinstance(value, (list, tuple)) or len(value) != 2:
        raise ValueError("a point is a two-element array of rationals")
    return Point2(_parse_rational(value[0]), _parse_rational(value[1]))


Rational = Annotated[
    Fraction,
    PlainValidator(_parse_rational),
    PlainSerializer(format_rational, return_type=str),
]

DirectionPair = Annotated[
    Direction,
    PlainValidator(_parse_direction),
    PlainSerializer(lambda d: [d.dx, d.dy], return_type=list),
]

PointPair = Annotated[
    Point2,
    PlainValidator(_parse_point),
    PlainSerializer(lambda p: [format_rational(p.x), format_rational(p.y)], return_type=list),
]


class SchemaModel(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, extra="forbid")


# =============================================================================
# Geometry
# =============================================================================

class FormModel(SchemaModel):
    a: Rational = Fraction(0)
    b: Rational = Fraction(0)
    c: Rational = Fraction(0)

    def to_core(self) -> AffineForm:
        return AffineForm(self.a, self.b, self.c)

    @classmethod
    def from_core(cls, form: AffineForm) -> "FormModel":
        return cls(a=form.a, b=form.b, c=form.c)


class HingeModel(SchemaModel):
    """{"base": form, "plus": [form...], "minus": [form...]}"""

    base: FormModel = Field(default_factory=FormModel)
    plus: List[FormModel] = Field(default_factory=list)
    minus: List[FormModel] = Field(default_factory=list)

    def to_core(self) -> HingeFunction:
        return HingeFunction(
            self.base.to_core(),
            tuple(f.to_core() for f in self.plus),
            tuple(f.to_core() for f in self.minus),
        )

    @classmethod
    def from_core(cls, h: HingeFunction) -> "HingeModel":
        return cls(
            base=FormModel.from_core(h.base),
            plus=[FormModel.from_core(f) for f in h.plus_terms],
            minus=[FormModel.from_core(f) for f in h.minus_terms],
        )


class ArcModel(SchemaModel):
    start: DirectionPair
    end: DirectionPair


class ConeModel(SchemaModel):
    kind: Literal["empty", "full", "arcs"]
    arcs: List[ArcModel] = Field(default_factory=list)

    def to_core(self) -> PolytopalCone:
        if self.kind == FULL:
            return PolytopalCone.full()
        if self.kind == EMPTY:
            return PolytopalCone.empty()
        return normalize_cone([Arc(a.start, a.end) for a in self.arcs])

    @classmethod
    def from_core(cls, cone: PolytopalCone) -> "ConeModel":
        if cone.kind != ARCS:
            return cls(kind=cone.kind)
        return cls(kind=ARCS, arcs=[ArcModel(start=a.start, end=a.end) for a in cone.arcs])


class CellModel(SchemaModel):
    constraints: List[FormModel]

    def to_core(self) -> ConvexCell:
        return ConvexCell(tuple(f.to_core() for f in self.constraints))

    @classmethod
    def from_core(cls, cell: ConvexCell) -> "CellModel":
        return cls(constraints=[FormModel.from_core(f) for f in cell.constraints])


class SetModel(SchemaModel):
    cells: List[CellModel] = Field(default_factory=list)

    def to_core(self) -> PolytopalSet:
        return PolytopalSet(tuple(c.to_core() for c in self.cells))

    @classmethod
    def from_core(cls, pset: PolytopalSet) -> "SetModel":
        return cls(cells=[CellModel.from_core(c) for c in pset.cells])


class PolygonModel(SchemaModel):
    """A convex polygon given either by its vertices or as a cell."""

    vertices: Optional[List[PointPair]] = None
    constraints: Optional[List[FormModel]] = None

    def to_core(self) -> ConvexCell:
        if (self.vertices is None) == (self.constraints is None):
            raise SchemaError("give exactly one of vertices or constraints")
        if self.vertices is not None:
            return convex_cell_from_vertices(self.vertices)
        return ConvexCell(tuple(f.to_core() for f in self.constraints))


class TriangleModel(SchemaModel):
    vertices: Tuple[PointPair, PointPair, PointPair]


class EvalModel(SchemaModel):
    hinge: HingeModel
    point: PointPair


class VerifyModel(SchemaModel):
    """Compare the positivity set of a hinge function against a target."""

    hinge: HingeModel
    cone: Optional[ConeModel] = None
    set: Optional[SetModel] = None


# =============================================================================
# Verdicts and reports
# =============================================================================

class GSpanModel(SchemaModel):
    kind: Literal["dim0", "dim1", "dim2"]
    line: Optional[DirectionPair] = None
    witnesses: List[DirectionPair] = Field(default_factory=list)

    @classmethod
    def from_core(cls, span: GSpan) -> "GSpanModel":
        return cls(kind=span.kind, line=span.line, witnesses=list(span.witnesses))


class WitnessModel(SchemaModel):
    """Separating half-plane normal, or the R-directions certifying a violation."""

    normal: Optional[DirectionPair] = None
    certificate: List[DirectionPair] = Field(default_factory=list)


class VerdictModel(SchemaModel):
    realizable: bool
    g_span: GSpanModel
    r_cone: ConeModel
    witness: WitnessModel

    @classmethod
    def from_core(cls, verdict: RealizabilityVerdict) -> "VerdictModel":
        return cls(
            realizable=verdict.realizable,
            g_span=GSpanModel.from_core(verdict.g_span),
            r_cone=ConeModel.from_core(verdict.r_cone),
            witness=WitnessModel(normal=verdict.normal, certificate=list(verdict.certificate)),
        )


class LocalConditionModel(SchemaModel):
    passed: bool
    checked: int
    point: Optional[PointPair] = None
    verdict: Optional[VerdictModel] = None

    @classmethod
    def from_core(cls, report: LocalConditionReport) -> "LocalConditionModel":
        return cls(
            passed=report.passed,
            checked=report.checked,
            point=report.point,
            verdict=VerdictModel.from_core(report.verdict) if report.verdict else None,
        )


class ComparisonModel(SchemaModel):
    equal: bool
    counterexample: Optional[PointPair] = None
    left: Optional[str] = None
    right: Optional[str] = None

    @classmethod
    def from_core(cls, comparison: SetComparison) -> "ComparisonModel":
        return cls(
            equal=comparison.equal,
            counterexample=comparison.counterexample,
            left=comparison.left.value if comparison.left else None,
            right=comparison.right.value if comparison.right else None,
        )


class ComponentModel(SchemaModel):
    cells: List[int]
    faces: List[int]
    bounded: bool


class ComponentsModel(SchemaModel):
    count: int
    bounded: List[bool]
    components: List[ComponentModel]

    @classmethod
    def from_core(cls, report: ComponentReport) -> "ComponentsModel":
        return cls(
            count=report.count,
            bounded=report.bounded,
            components=[
                ComponentModel(cells=list(c.cells), faces=list(c.faces), bounded=c.bounded)
                for c in report.components
            ],
        )


class VertexModel(SchemaModel):
    point: PointPair
    lines: List[int]
    sign: int


class EdgeModel(SchemaModel):
    line: int
    start: Optional[int] = None
    end: Optional[int] = None
    sample: PointPair
    sign: int


class FaceModel(SchemaModel):
    signs: List[int]
    sample: PointPair
    bounded: bool
    sign: int


class ArrangementModel(SchemaModel):
    """Labeled arrangement: the sign of h on every face, edge and vertex."""

    lines: List[FormModel]
    vertices: List[VertexModel]
    edges: List[EdgeModel]
    faces: List[FaceModel]

    @classmethod
    def from_core(cls, arrangement: Arrangement, result: Optional[PositivityResult] = None) -> "ArrangementModel":
        v_labels = result.vertex_labels if result else [0] * len(arrangement.vertices)
        e_labels = result.edge_labels if result else [0] * len(arrangement.edges)
        f_labels = result.face_labels if result else [0] * len(arrangement.faces)
        return cls(
            lines=[FormModel.from_core(l) for l in arrangement.lines],
            vertices=[
                VertexModel(point=v.point, lines=list(v.lines), sign=s)
                for v, s in zip(arrangement.vertices, v_labels)
            ],
            edges=[
                EdgeModel(line=e.line, start=e.start, end=e.end, sample=e.sample, sign=s)
                for e, s in zip(arrangement.edges, e_labels)
            ],
            faces=[
                FaceModel(signs=list(f.signs), sample=f.sample, bounded=f.bounded, sign=s)
                for f, s in zip(arrangement.faces, f_labels)
            ],
        )


class PositivityModel(SchemaModel):
    set: SetModel
    arrangement: ArrangementModel

    @classmethod
    def from_core(cls, result: PositivityResult) -> "PositivityModel":
        return cls(
            set=SetModel.from_core(result.set),
            arrangement=ArrangementModel.from_core(result.arrangement, result),
        )


# =============================================================================
# Synthesis trace
# =============================================================================

class SegmentModel(SchemaModel):
    start: DirectionPair
    end: DirectionPair
    inserted: DirectionPair
    case: int
    rule: str


class CutModel(SchemaModel):
    ray: DirectionPair
    case: str


class ProfileEntry(SchemaModel):
    ray: DirectionPair
    value: Rational


class SynthesisTrace(SchemaModel):
    """Frame, cases and symmetric profile of one cone synthesis."""

    g_kind: str
    pi_normal: DirectionPair
    e: PointPair
    boundary_line: DirectionPair
    segments: List[SegmentModel]
    cuts: List[CutModel]
    profile: List[ProfileEntry]

    @classmethod
    def from_core(cls, frame: SynthesisFrame, profile: SymmetricProfile) -> "SynthesisTrace":
        return cls(
            g_kind=frame.g_kind,
            pi_normal=frame.pi_normal,
            e=frame.e,
            boundary_line=frame.boundary_line,
            segments=[
                SegmentModel(
                    start=s.start_ray, end=s.end_ray, inserted=s.inserted_ray,
                    case=s.case, rule=s.inserted_value_rule,
                )
                for s in frame.segments
            ],
            cuts=[CutModel(ray=t, case=c) for t, c in frame.segment_boundary_rays],
            profile=[ProfileEntry(ray=d, value=v) for d, v in profile.rays],
        )


# =============================================================================
# Canonical JSON
# =============================================================================

def to_jsonable(value: Any) -> Any:
    if isinstance(value, BaseModel):
        return value.model_dump(mode="json")
    if isinstance(value, dict):
        return {k: to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, Fraction):
        return format_rational(value)
    if value is None or isinstance(value, (str, int, float, bool)):
        return value
    return str(value)


def canonical_json(value: Any) -> str:
    """Sorted keys, two-space indent, trailing newline."""
    return json.dumps(to_jsonable(value), sort_keys=True, indent=2) + "\n"
