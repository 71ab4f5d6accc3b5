"""
Synthesis of a hinge function whose positivity set is a given cone.

Pipeline: pick a half-plane pi and a vector e from the dimension of the
span of G; cut pi into segments at every boundary ray of C (or antipode
of one); classify each segment by membership of p and -p in C and each
cut ray by its position relative to the boundary; assign values of a
centrally symmetric function s on the cut rays and on one inserted ray
per segment; interpolate, add e.x, peel into hinge form and verify the
result against C on the arrangement oracle.
"""

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import List, Optional, Tuple

from hingeset.core.cones import (
    DIM0,
    DIM1,
    DIM2,
    PolytopalCone,
    RealizabilityVerdict,
    boundary_rays,
    candidate_normals,
    check_cone_condition,
    contains_direction,
    critical_directions,
    g_lines,
)
from hingeset.core.errors import DegenerateInput, InternalInconsistency, NotRealizable
from hingeset.core.exact import (
    Direction,
    Point2,
    Vec2,
    ccw_offset,
    sample_inside_arc,
    solve_2x2,
    strictly_between,
)
from hingeset.core.hinge import HingeFunction, PosHomCPWL, decompose_symmetric, peel_to_hinge
from hingeset.core.planar import cone_to_set, positivity_set, set_equal
from hingeset.logging_config import get_logger

logger = get_logger(__name__)

ZERO = Point2(0, 0)

CASE_1 = 1
CASE_2 = 2
CASE_3 = 3
CASE_A = "A"
CASE_B = "B"
CASE_C = "C"

FORBIDDEN = {(CASE_1, CASE_A), (CASE_2, CASE_B), (CASE_3, CASE_C)}


@dataclass(frozen=True)
class Segment:
    start_ray: Direction
    end_ray: Direction
    inserted_ray: Direction
    case: Optional[int] = None
    inserted_value_rule: str = ""


@dataclass(frozen=True)
class SynthesisFrame:
    """Half-plane pi = {pi_normal . x > 0} with its segments.

    ``boundary_line`` is the direction of the line bounding pi; the rays
    of pi's boundary are -boundary_line (where segments start) and
    boundary_line (where they end).
    """

    g_kind: str
    pi_normal: Direction
    e: Vec2
    boundary_line: Direction
    segments: Tuple[Segment, ...]
    segment_boundary_rays: Tuple[Tuple[Direction, Optional[str]], ...]

    @property
    def start_ray(self) -> Direction:
        return -self.boundary_line

    @property
    def end_ray(self) -> Direction:
        return self.boundary_line


@dataclass(frozen=True)
class SymmetricProfile:
    """Values of s at the primitive point of each ray, counterclockwise."""

    rays: Tuple[Tuple[Direction, Fraction], ...]

    def value(self, d: Direction) -> Fraction:
        for ray, v in self.rays:
            if ray == d:
                return v
        raise KeyError(d)


@dataclass
class ConeSynthesis:
    hinge: HingeFunction
    verdict: RealizabilityVerdict
    frame: Optional[SynthesisFrame] = None
    profile: Optional[SymmetricProfile] = None


def _dim0_normal(cone: PolytopalCone, verdict: RealizabilityVerdict) -> Direction:
    rays = set(boundary_rays(cone))
    for n in candidate_normals(critical_directions(cone)):
        if verdict.r_set.strictly_inside(n) and n.perp_ccw() not in rays and n.perp_cw() not in rays:
            return n
    raise InternalInconsistency("no half-plane contains R while avoiding the boundary of C")


def choose_frame(cone: PolytopalCone, verdict: Optional[RealizabilityVerdict] = None) -> SynthesisFrame:
    """Choose pi and e and cut pi into (unclassified) segments."""
    if cone.is_full or cone.is_empty:
        raise DegenerateInput("full and empty cones need no frame")
    verdict = verdict or check_cone_condition(cone)
    if not verdict.realizable:
        raise NotRealizable(verdict)

    kind = verdict.g_span.kind
    if kind == DIM2:
        normal = g_lines(cone)[0].perp_ccw()
        e = ZERO
    elif kind == DIM1:
        normal = verdict.normal
        e = normal.vec()
    else:
        normal = _dim0_normal(cone, verdict)
        e = normal.vec()

    b0, b1 = normal.perp_cw(), normal.perp_ccw()
    rays = boundary_rays(cone)
    cuts = sorted(
        {t for r in rays for t in (r, -r) if strictly_between(t, b0, b1)},
        key=lambda t: ccw_offset(t, b0),
    )
    stops = [b0] + cuts + [b1]
    segments = tuple(
        Segment(stops[k], stops[k + 1], sample_inside_arc(stops[k], stops[k + 1]))
        for k in range(len(stops) - 1)
    )
    frame = SynthesisFrame(kind, normal, e, b1, segments, tuple((t, None) for t in cuts))
    logger.debug("frame: %s span, normal %s, e %s, %d segments", kind, normal, e, len(segments))
    return frame


def classify_segments(cone: PolytopalCone, frame: SynthesisFrame) -> SynthesisFrame:
    """Fill in segment cases 1/2/3 and cut-ray cases A/B/C."""
    on_boundary = set(boundary_rays(cone))

    segments = []
    for seg in frame.segments:
        p = seg.inserted_ray
        inside, opposite = contains_direction(cone, p), contains_direction(cone, -p)
        if inside and opposite:
            case = CASE_1
        elif not inside and not opposite:
            case = CASE_2
        elif inside:
            case = CASE_3
        else:
            raise InternalInconsistency("segment with p outside C and -p inside C", ray=[p.dx, p.dy])
        segments.append(replace(seg, case=case))

    cut_cases = []
    for t, _ in frame.segment_boundary_rays:
        t_on, opp_on = t in on_boundary, -t in on_boundary
        if t_on and opp_on:
            case = CASE_C
        elif t_on and not contains_direction(cone, -t):
            case = CASE_A
        elif opp_on and contains_direction(cone, t):
            case = CASE_B
        else:
            raise InternalInconsistency("impossible boundary ray configuration", ray=[t.dx, t.dy])
        cut_cases.append((t, case))

    e_zero = frame.e.is_zero()
    for k, (t, case) in enumerate(cut_cases):
        for neighbour in (segments[k], segments[k + 1]):
            if (neighbour.case, case) in FORBIDDEN:
                raise InternalInconsistency(f"forbidden combination {neighbour.case}{case}", ray=[t.dx, t.dy])
        if case == CASE_C and not e_zero:
            raise InternalInconsistency("case C with nonzero e", ray=[t.dx, t.dy])
    if e_zero and any(s.case == CASE_3 for s in segments):
        raise InternalInconsistency("case 3 segment with e = 0")
    if frame.g_kind == DIM0 and segments[0].case != segments[-1].case:
        raise InternalInconsistency("extremal segments differ in case")
    if frame.g_kind == DIM0 and segments[0].case not in (CASE_1, CASE_2):
        raise InternalInconsistency("extremal segments must be case 1 or 2")

    classified = replace(frame, segments=tuple(segments), segment_boundary_rays=tuple(cut_cases))
    logger.debug(
        "segment cases %s, cut cases %s",
        [s.case for s in segments], [c for _, c in cut_cases],
    )
    return classified


def _inserted_value(case: int, r: Direction, e: Vec2) -> Tuple[Fraction, str]:
    rv = r.vec()
    if case == CASE_3:
        return Fraction(0), "0"
    if e.is_zero():
        return (Fraction(r.norm2()), "r.r") if case == CASE_1 else (Fraction(-r.norm2()), "-r.r")
    if case == CASE_1:
        return 2 * e.dot(rv), "2e.r"
    return -2 * e.dot(rv), "-2e.r"


def build_symmetric_profile(frame: SynthesisFrame) -> Tuple[SynthesisFrame, SymmetricProfile]:
    """Values of s on every ray of pi, extended antipodally.

    Returns the frame with the inserted-value rules recorded.
    """
    e = frame.e
    half: List[Tuple[Direction, Fraction]] = []

    b0 = frame.start_ray
    if frame.g_kind == DIM0:
        sign = 1 if frame.segments[0].case == CASE_1 else -1
        edge_value = Fraction(sign * b0.norm2())
    else:
        edge_value = Fraction(0)
    half.append((b0, edge_value))

    segments = []
    cut_values = {
        t: (-e.dot(t.vec()) if case == CASE_A else e.dot(t.vec()) if case == CASE_B else Fraction(0))
        for t, case in frame.segment_boundary_rays
    }
    for k, seg in enumerate(frame.segments):
        value, rule = _inserted_value(seg.case, seg.inserted_ray, e)
        segments.append(replace(seg, inserted_value_rule=rule))
        half.append((seg.inserted_ray, value))
        if k < len(frame.segments) - 1:
            half.append((seg.end_ray, cut_values[seg.end_ray]))

    rays = half + [(frame.end_ray, edge_value)] + [(-d, v) for d, v in half[1:]]
    profile = SymmetricProfile(tuple(rays))
    return replace(frame, segments=tuple(segments)), profile


def profile_to_poshom(profile: SymmetricProfile, e: Vec2) -> PosHomCPWL:
    """s + e.x, with s the linear interpolation of the profile."""
    rays = profile.rays
    n = len(rays)
    breaks, gradients = [], []
    for k in range(n):
        (u, su), (w, sw) = rays[k], rays[(k + 1) % n]
        breaks.append(u)
        gradients.append(solve_2x2(u, w, su, sw) + e)
    return PosHomCPWL.from_sectors(breaks, gradients)


def synthesize_cone_report(cone: PolytopalCone) -> ConeSynthesis:
    verdict = check_cone_condition(cone)
    if not verdict.realizable:
        raise NotRealizable(verdict)
    if cone.is_full:
        return ConeSynthesis(HingeFunction.constant(1), verdict)
    if cone.is_empty:
        return ConeSynthesis(HingeFunction.constant(-1), verdict)

    frame = classify_segments(cone, choose_frame(cone, verdict))
    frame, profile = build_symmetric_profile(frame)
    f = profile_to_poshom(profile, frame.e)
    hinge = peel_to_hinge(decompose_symmetric(f))

    comparison = set_equal(positivity_set(hinge).set, cone_to_set(cone))
    if not comparison.equal:
        raise InternalInconsistency(
            "synthesized function fails verification",
            counterexample=str(comparison.counterexample),
        )
    logger.info("synthesized cone with %d arcs: %d terms", len(cone.arcs), len(hinge.terms))
    return ConeSynthesis(hinge, verdict, frame, profile)


def synthesize_cone(cone: PolytopalCone) -> HingeFunction:
    """Verified hinge function whose positivity set is exactly ``cone``."""
    return synthesize_cone_report(cone).hinge
