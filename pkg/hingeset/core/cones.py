"""
Polytopal cones in the plane as unions of open angular arcs.

A cone is stored canonically: maximal open arcs with disjoint closures,
sorted by the counterclockwise offset of their start from (1, 0). Every
operation reduces to a membership predicate evaluated on the elementary
pieces (rays and open arcs) cut out by a finite set of critical
directions, so no angle is ever computed numerically.
"""

from dataclasses import dataclass, field
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

from hingeset.logging_config import get_logger

from .exact import (
    Direction,
    ccw_offset,
    sample_inside_arc,
    sort_ccw,
    strictly_between,
)

logger = get_logger(__name__)

_EAST = Direction(1, 0)
_AXES = (Direction(1, 0), Direction(0, 1), Direction(-1, 0), Direction(0, -1))

EMPTY = "empty"
FULL = "full"
ARCS = "arcs"


@dataclass(frozen=True)
class Arc:
    """Open counterclockwise arc strictly between start and end.

    start == end denotes the circle with the single ray start removed.
    """

    start: Direction
    end: Direction

    def contains(self, d: Direction) -> bool:
        return strictly_between(d, self.start, self.end)

    def __neg__(self) -> "Arc":
        return Arc(-self.start, -self.end)

    def sample(self) -> Direction:
        if self.start == self.end:
            return -self.start
        return sample_inside_arc(self.start, self.end)


@dataclass(frozen=True)
class PolytopalCone:
    kind: str
    arcs: Tuple[Arc, ...] = ()

    @classmethod
    def empty(cls) -> "PolytopalCone":
        return cls(EMPTY)

    @classmethod
    def full(cls) -> "PolytopalCone":
        return cls(FULL)

    @property
    def is_empty(self) -> bool:
        return self.kind == EMPTY

    @property
    def is_full(self) -> bool:
        return self.kind == FULL

    def contains(self, d: Direction) -> bool:
        return contains_direction(self, d)

    def __neg__(self) -> "PolytopalCone":
        return negate_cone(self)


def cone_from_predicate(
    critical: Iterable[Direction], contains: Callable[[Direction], bool]
) -> PolytopalCone:
    """Canonical cone of directions satisfying ``contains``.

    The predicate must be constant on each open arc between consecutive
    critical directions. Antipodes and the four axis directions are added
    so every elementary arc is shorter than a half-turn. Included rays
    that are not adjacent to an included arc are dropped (cones are open).
    """
    crit = sort_ccw(list(critical) + [-d for d in critical] + list(_AXES))
    n = len(crit)
    # pieces alternate: ray crit[k] at 2k, arc (crit[k], crit[k+1]) at 2k+1
    inside = []
    for k in range(n):
        inside.append(contains(crit[k]))
        inside.append(contains(sample_inside_arc(crit[k], crit[(k + 1) % n])))
    if all(inside):
        return PolytopalCone.full()
    if not any(inside[1::2]):
        return PolytopalCone.empty()

    m = 2 * n
    first_out = inside.index(False)
    arcs: List[Arc] = []
    run: List[int] = []
    for step in range(1, m + 1):
        i = (first_out + step) % m
        if inside[i]:
            run.append(i)
            continue
        arc_pieces = [j for j in run if j % 2 == 1]
        if arc_pieces:
            start = crit[arc_pieces[0] // 2]
            end = crit[(arc_pieces[-1] // 2 + 1) % n]
            arcs.append(Arc(start, end))
        run = []
    arcs.sort(key=lambda a: ccw_offset(a.start, _EAST))
    return PolytopalCone(ARCS, tuple(arcs))


def _endpoints(arcs: Iterable[Arc]) -> List[Direction]:
    return [d for a in arcs for d in (a.start, a.end)]


def normalize_cone(raw: Sequence[Arc]) -> PolytopalCone:
    """Merge raw arcs into the canonical form of their union."""
    raw = list(raw)
    if not raw:
        return PolytopalCone.empty()
    return cone_from_predicate(_endpoints(raw), lambda d: any(a.contains(d) for a in raw))


def contains_direction(cone: PolytopalCone, d: Direction) -> bool:
    if cone.kind == FULL:
        return True
    if cone.kind == EMPTY:
        return False
    return any(a.contains(d) for a in cone.arcs)


def negate_cone(cone: PolytopalCone) -> PolytopalCone:
    if cone.kind != ARCS:
        return cone
    return normalize_cone([-a for a in cone.arcs])


def boundary_rays(cone: PolytopalCone) -> List[Direction]:
    """Arc endpoints, counterclockwise from (1, 0)."""
    if cone.kind != ARCS:
        return []
    return sort_ccw(_endpoints(cone.arcs))


def critical_directions(cone: PolytopalCone) -> List[Direction]:
    """Boundary rays closed under negation, plus the axes."""
    rays = boundary_rays(cone)
    return sort_ccw(rays + [-d for d in rays] + list(_AXES))


def complement_of_boundary(cone: PolytopalCone) -> PolytopalCone:
    """The circle with the boundary rays of ``cone`` removed."""
    rays = set(boundary_rays(cone))
    if not rays:
        return PolytopalCone.full()
    return cone_from_predicate(rays, lambda d: d not in rays)


# =============================================================================
# R and G
# =============================================================================

@dataclass(frozen=True)
class RSet:
    """Directions p in C with -p outside C, split into elementary pieces.

    ``rays`` are critical directions in R; ``arcs`` are elementary open
    arcs (each shorter than a half-turn) contained in R.
    """

    rays: Tuple[Direction, ...]
    arcs: Tuple[Arc, ...]
    cone: PolytopalCone

    @property
    def is_empty(self) -> bool:
        return not self.rays and not self.arcs

    def representatives(self) -> List[Direction]:
        return list(self.rays) + [a.sample() for a in self.arcs]

    def strictly_inside(self, normal: Direction) -> bool:
        """True if every direction of R has a positive dot product with normal."""
        if any(normal.dot(d) <= 0 for d in self.rays):
            return False
        return all(normal.dot(a.start) >= 0 and normal.dot(a.end) >= 0 for a in self.arcs)


def compute_R_parts(cone: PolytopalCone) -> RSet:
    if cone.kind != ARCS:
        return RSet((), (), PolytopalCone.empty())

    def in_r(d: Direction) -> bool:
        return contains_direction(cone, d) and not contains_direction(cone, -d)

    crit = critical_directions(cone)
    n = len(crit)
    rays = tuple(d for d in crit if in_r(d))
    arcs = tuple(
        Arc(crit[k], crit[(k + 1) % n])
        for k in range(n)
        if in_r(sample_inside_arc(crit[k], crit[(k + 1) % n]))
    )
    return RSet(rays, arcs, cone_from_predicate(crit, in_r))


def compute_R(cone: PolytopalCone) -> PolytopalCone:
    """C minus -C, as a canonical cone (open part)."""
    return compute_R_parts(cone).cone


DIM0 = "dim0"
DIM1 = "dim1"
DIM2 = "dim2"


@dataclass(frozen=True)
class GSpan:
    kind: str
    line: Optional[Direction] = None
    witnesses: Tuple[Direction, ...] = ()

    @property
    def dim(self) -> int:
        return {DIM0: 0, DIM1: 1, DIM2: 2}[self.kind]


def g_lines(cone: PolytopalCone) -> List[Direction]:
    """Boundary lines through the origin, as canonical directions."""
    rays = set(boundary_rays(cone))
    lines = {d.canonical_line() for d in rays if -d in rays}
    return sort_ccw(lines)


def compute_G_span(cone: PolytopalCone) -> GSpan:
    lines = g_lines(cone)
    if not lines:
        return GSpan(DIM0)
    if len(lines) == 1:
        return GSpan(DIM1, line=lines[0], witnesses=(lines[0],))
    return GSpan(DIM2, witnesses=(lines[0], lines[1]))


# =============================================================================
# Realizability criterion
# =============================================================================

@dataclass(frozen=True)
class RealizabilityVerdict:
    realizable: bool
    g_span: GSpan
    r_cone: PolytopalCone
    normal: Optional[Direction] = None
    certificate: Tuple[Direction, ...] = ()
    r_set: Optional[RSet] = field(default=None, compare=False, repr=False)


def candidate_normals(directions: Iterable[Direction]) -> List[Direction]:
    """Normals to try for a half-plane test against constraints built on ``directions``.

    The feasible normals form a cone bounded by perpendiculars of the
    constraint directions, so the perpendiculars and one direction
    strictly between each consecutive pair cover every case.
    """
    perps = sort_ccw(p for d in directions for p in (d.perp_ccw(), d.perp_cw()))
    n = len(perps)
    if n == 0:
        return [_EAST]
    between = [sample_inside_arc(perps[k], perps[(k + 1) % n]) for k in range(n)] if n > 1 else [-perps[0]]
    return between + perps


def _positively_spanning(d1: Direction, d2: Direction, d3: Direction) -> bool:
    c = (d1.cross(d2), d2.cross(d3), d3.cross(d1))
    return all(x > 0 for x in c) or all(x < 0 for x in c)


def _dim0_certificate(reps: List[Direction]) -> Tuple[Direction, ...]:
    present = set(reps)
    for d in reps:
        if -d in present:
            return (d, -d)
    for i in range(len(reps)):
        for j in range(i + 1, len(reps)):
            for k in range(j + 1, len(reps)):
                if _positively_spanning(reps[i], reps[j], reps[k]):
                    return (reps[i], reps[j], reps[k])
    return tuple(reps)


def check_cone_condition(cone: PolytopalCone) -> RealizabilityVerdict:
    """Decide whether span(G) and Conv(R) are disjoint."""
    if cone.kind != ARCS:
        return RealizabilityVerdict(True, GSpan(DIM0), PolytopalCone.empty(), r_set=compute_R_parts(cone))

    r = compute_R_parts(cone)
    g = compute_G_span(cone)
    if g.kind == DIM2:
        if r.is_empty:
            verdict = RealizabilityVerdict(True, g, r.cone, r_set=r)
        else:
            verdict = RealizabilityVerdict(False, g, r.cone, certificate=tuple(r.representatives()[:1]), r_set=r)
    elif g.kind == DIM1:
        n1, n2 = g.line.perp_ccw(), g.line.perp_cw()
        if r.strictly_inside(n1):
            verdict = RealizabilityVerdict(True, g, r.cone, normal=n1, r_set=r)
        elif r.strictly_inside(n2):
            verdict = RealizabilityVerdict(True, g, r.cone, normal=n2, r_set=r)
        else:
            reps = r.representatives()
            on_line = [d for d in r.rays if d.cross(g.line) == 0]
            if on_line:
                cert = (on_line[0],)
            else:
                cert = (
                    next(d for d in reps if n1.dot(d) <= 0),
                    next(d for d in reps if n2.dot(d) <= 0),
                )
            verdict = RealizabilityVerdict(False, g, r.cone, certificate=cert, r_set=r)
    else:
        normal = next((n for n in candidate_normals(critical_directions(cone)) if r.strictly_inside(n)), None)
        if normal is not None:
            verdict = RealizabilityVerdict(True, g, r.cone, normal=normal, r_set=r)
        else:
            verdict = RealizabilityVerdict(False, g, r.cone, certificate=_dim0_certificate(r.representatives()), r_set=r)
    logger.debug("cone condition: %s span, realizable=%s", verdict.g_span.kind, verdict.realizable)
    return verdict
