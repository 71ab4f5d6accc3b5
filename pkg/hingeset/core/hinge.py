"""
Hinge functions and positively homogeneous piecewise-linear functions.

A hinge function is ``L0 + sum |Li| - sum |Lj|``. Terms entering with a
plus sign are valleys, those with a minus sign mountains. Term order is
canonical: plus terms then minus terms, each list sorted on the
sign-normalized (a, b, c).
"""

from bisect import bisect_right
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from hingeset.logging_config import get_logger

from .errors import (
    DegenerateInput,
    InternalInconsistency,
    LengthMismatch,
    NotDecomposable,
    NotHomogeneous,
    OnBreakLocus,
)
from .exact import (
    AffineForm,
    AffineMap,
    Direction,
    Point2,
    RationalLike,
    Vec2,
    ccw_offset,
    sample_inside_arc,
    sort_ccw,
    to_rational,
)

logger = get_logger(__name__)

SignVector = Tuple[int, ...]

_EAST = Direction(1, 0)


def _canonical_terms(terms: Iterable[AffineForm]) -> Tuple[AffineForm, ...]:
    normalized = []
    for term in terms:
        if term.is_zero():
            raise DegenerateInput("hinge terms must be nonzero affine forms")
        normalized.append(term.sign_normalized()[0])
    return tuple(sorted(normalized, key=lambda f: f.key()))


@dataclass(frozen=True)
class HingeFunction:
    base: AffineForm
    plus_terms: Tuple[AffineForm, ...] = ()
    minus_terms: Tuple[AffineForm, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "plus_terms", _canonical_terms(self.plus_terms))
        object.__setattr__(self, "minus_terms", _canonical_terms(self.minus_terms))

    # -------------------------------------------------------------------------
    # Construction
    # -------------------------------------------------------------------------

    @classmethod
    def from_terms(
        cls, base: AffineForm, terms: Iterable[Tuple[RationalLike, AffineForm]]
    ) -> "HingeFunction":
        """Build ``base + sum coef * |form|``, folding coefficients into the forms.

        Proportional forms are merged; constant forms are absorbed into the
        base; coefficients that cancel drop the term.
        """
        weights: Dict[AffineForm, Fraction] = {}
        base_c = base.c
        for coef, form in terms:
            coef = to_rational(coef)
            if coef == 0 or form.is_zero():
                continue
            if form.is_constant():
                base_c += coef * abs(form.c)
                continue
            prim = form.primitive()
            scale = form.a / prim.a if prim.a != 0 else form.b / prim.b
            weights[prim] = weights.get(prim, Fraction(0)) + coef * abs(scale)
        plus, minus = [], []
        for prim, w in weights.items():
            if w > 0:
                plus.append(prim.scale(w))
            elif w < 0:
                minus.append(prim.scale(-w))
        return cls(AffineForm(base.a, base.b, base_c), tuple(plus), tuple(minus))

    @classmethod
    def affine(cls, form: AffineForm) -> "HingeFunction":
        return cls(form)

    @classmethod
    def constant(cls, value: RationalLike) -> "HingeFunction":
        return cls(AffineForm(0, 0, value))

    # -------------------------------------------------------------------------
    # Terms
    # -------------------------------------------------------------------------

    @property
    def terms(self) -> Tuple[AffineForm, ...]:
        return self.plus_terms + self.minus_terms

    @property
    def term_signs(self) -> Tuple[int, ...]:
        return (1,) * len(self.plus_terms) + (-1,) * len(self.minus_terms)

    def weighted_terms(self) -> List[Tuple[int, AffineForm]]:
        return list(zip(self.term_signs, self.terms))

    def break_lines(self) -> List[AffineForm]:
        """Zero lines of the nonconstant terms, valleys first."""
        return [t for t in self.terms if not t.is_constant()]

    def valleys(self) -> List[AffineForm]:
        return [t for t in self.plus_terms if not t.is_constant()]

    def mountains(self) -> List[AffineForm]:
        return [t for t in self.minus_terms if not t.is_constant()]

    def is_homogeneous(self) -> bool:
        """Syntactic test: every constant part is zero."""
        return self.base.c == 0 and all(t.c == 0 for t in self.terms)

    # -------------------------------------------------------------------------
    # Evaluation
    # -------------------------------------------------------------------------

    def evaluate(self, p: Point2) -> Fraction:
        value = self.base(p)
        for sign, term in self.weighted_terms():
            value += sign * abs(term(p))
        return value

    __call__ = evaluate

    def sign_vector(self, p: Point2) -> SignVector:
        signs = []
        for k, term in enumerate(self.terms):
            v = term(p)
            if v == 0:
                raise OnBreakLocus(k)
            signs.append(1 if v > 0 else -1)
        return tuple(signs)

    def local_affine(self, sigma: Sequence[int]) -> AffineForm:
        """Affine representation on the tile with sign vector sigma."""
        if len(sigma) != len(self.terms):
            raise LengthMismatch(
                f"sign vector has {len(sigma)} entries, hinge has {len(self.terms)} terms",
                expected=len(self.terms),
                got=len(sigma),
            )
        form = self.base
        for (sign, term), s in zip(self.weighted_terms(), sigma):
            form = form + term.scale(sign * s)
        return form

    def gradient_at(self, p: Point2) -> Vec2:
        return self.local_affine(self.sign_vector(p)).gradient()

    # -------------------------------------------------------------------------
    # Arithmetic
    # -------------------------------------------------------------------------

    def __add__(self, other: "HingeFunction") -> "HingeFunction":
        terms = [(s, t) for s, t in self.weighted_terms()] + [(s, t) for s, t in other.weighted_terms()]
        return HingeFunction.from_terms(self.base + other.base, terms)

    def __neg__(self) -> "HingeFunction":
        return self.scale(-1)

    def __sub__(self, other: "HingeFunction") -> "HingeFunction":
        return self + (-other)

    def scale(self, k: RationalLike) -> "HingeFunction":
        k = to_rational(k)
        if k == 0:
            return HingeFunction(AffineForm(0, 0, 0))
        plus = tuple(t.scale(abs(k)) for t in self.plus_terms)
        minus = tuple(t.scale(abs(k)) for t in self.minus_terms)
        if k < 0:
            plus, minus = minus, plus
        return HingeFunction(self.base.scale(k), plus, minus)

    def add_affine(self, form: AffineForm) -> "HingeFunction":
        return HingeFunction(self.base + form, self.plus_terms, self.minus_terms)

    def compose(self, transform: AffineMap) -> "HingeFunction":
        """The hinge function x -> self(transform(x))."""
        return HingeFunction(
            self.base.compose(transform),
            tuple(t.compose(transform) for t in self.plus_terms),
            tuple(t.compose(transform) for t in self.minus_terms),
        )

    def simplified(self) -> "HingeFunction":
        return HingeFunction.from_terms(self.base, self.weighted_terms())

    def __repr__(self) -> str:
        parts = [repr(self.base)]
        parts += [f"+|{t!r}|" for t in self.plus_terms]
        parts += [f"-|{t!r}|" for t in self.minus_terms]
        return "Hinge(" + " ".join(parts) + ")"


def ramp(form: AffineForm) -> HingeFunction:
    """(|H| - H) / 2: zero where H >= 0, equal to -H where H < 0."""
    return HingeFunction.from_terms(form.scale(Fraction(-1, 2)), [(Fraction(1, 2), form)])


def min_hinge(l1: AffineForm, l2: AffineForm) -> HingeFunction:
    """min(L1, L2) = (L1 + L2)/2 - |(L1 - L2)/2|."""
    return HingeFunction.from_terms((l1 + l2).scale(Fraction(1, 2)), [(-1, (l1 - l2).scale(Fraction(1, 2)))])


def hinge_of_half_plane(form: AffineForm) -> HingeFunction:
    return HingeFunction(form)


# =============================================================================
# Local gradients
# =============================================================================

def _as_vec(u: Union[Direction, Vec2]) -> Vec2:
    return u.vec() if isinstance(u, Direction) else u


def admissible_step(h: HingeFunction, p: Point2, u: Union[Direction, Vec2]) -> Fraction:
    """Step t > 0 such that p + s*u, 0 < |s| <= t, meets no break line missing p.

    Returns half the distance (in units of u) to the nearest such line;
    1 when no line is hit along u.
    """
    u = _as_vec(u)
    step: Optional[Fraction] = None
    for term in h.break_lines():
        value = term(p)
        rate = term.a * u.x + term.b * u.y
        if value == 0 or rate == 0:
            continue
        candidate = abs(value) / (2 * abs(rate))
        if step is None or candidate < step:
            step = candidate
    return step if step is not None else Fraction(1)


def lines_through(h: HingeFunction, p: Point2) -> List[AffineForm]:
    return [t for t in h.break_lines() if t(p) == 0]


def admissible_direction(h: HingeFunction, p: Point2, start: int = 0) -> Direction:
    """(1, k) for the smallest k >= start avoiding every break line through p."""
    through = lines_through(h, p)
    k = start
    while any(t.a + t.b * k == 0 for t in through):
        k += 1
    return Direction.from_vector(1, k)


def gradient_pair_sum(h: HingeFunction, p: Point2, q: Point2) -> Vec2:
    """grad h(q) + grad h(2p - q)."""
    return h.gradient_at(q) + h.gradient_at(p.scale(2) - q)


def central_gradient_sum(h: HingeFunction, p: Point2) -> Vec2:
    """The vector gamma with grad h(q) + grad h(2p - q) = gamma near p."""
    u = admissible_direction(h, p)
    delta = admissible_step(h, p, u)
    q = p + u.vec().scale(delta)
    gamma = gradient_pair_sum(h, p, q)
    logger.debug("central gradient sum at %s via q=%s: %s", p, q, gamma)
    return gamma


# =============================================================================
# Positively homogeneous CPWL functions
# =============================================================================

@dataclass(frozen=True)
class PosHomCPWL:
    """Sector-gradient representation of a positively homogeneous CPWL function.

    gradients[k] is valid on the open sector from breaks[k] to breaks[k+1]
    (cyclically). With no breaks the function is linear.
    """

    breaks: Tuple[Direction, ...]
    gradients: Tuple[Vec2, ...]
    _offsets: Tuple[Fraction, ...] = field(default=(), repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "breaks", tuple(self.breaks))
        object.__setattr__(self, "gradients", tuple(self.gradients))
        if len(self.gradients) != max(1, len(self.breaks)):
            raise DegenerateInput("one gradient per sector is required")
        offsets = tuple(ccw_offset(d, _EAST) for d in self.breaks)
        if any(a >= b for a, b in zip(offsets, offsets[1:])):
            raise DegenerateInput("breaks must be distinct and sorted counterclockwise from (1, 0)")
        object.__setattr__(self, "_offsets", offsets)
        for k, d in enumerate(self.breaks):
            jump = self.gradients[k] - self.gradients[k - 1]
            if jump.dot(d.vec()) != 0:
                raise DegenerateInput(f"discontinuous across break {d}", direction=[d.dx, d.dy])

    @classmethod
    def linear(cls, gradient: Vec2) -> "PosHomCPWL":
        return cls((), (gradient,))

    @classmethod
    def from_sectors(cls, breaks: Sequence[Direction], gradients: Sequence[Vec2]) -> "PosHomCPWL":
        """Normalize: sort breaks CCW from (1, 0) and drop breaks without a jump."""
        if not breaks:
            return cls((), (gradients[0],))
        order = sorted(range(len(breaks)), key=lambda k: ccw_offset(breaks[k], _EAST))
        breaks = [breaks[k] for k in order]
        gradients = [gradients[k] for k in order]
        keep = [k for k in range(len(breaks)) if gradients[k] != gradients[k - 1]]
        if not keep:
            return cls((), (gradients[0],))
        return cls(tuple(breaks[k] for k in keep), tuple(gradients[k] for k in keep))

    def sector_index(self, d: Direction) -> int:
        """Index of the sector containing d (a break belongs to the sector it starts)."""
        if not self.breaks:
            return 0
        k = bisect_right(self._offsets, ccw_offset(d, _EAST)) - 1
        return k % len(self.breaks)

    def gradient_for(self, d: Direction) -> Vec2:
        return self.gradients[self.sector_index(d)]

    def evaluate(self, p: Point2) -> Fraction:
        if p.is_zero():
            return Fraction(0)
        return self.gradient_for(Direction.of(p)).dot(p)

    __call__ = evaluate

    def jump_at(self, d: Direction) -> Fraction:
        """Scalar jump crossing d counterclockwise, along perp_ccw(d); 0 off the breaks."""
        if d not in self.breaks:
            return Fraction(0)
        k = self.breaks.index(d)
        jump = self.gradients[k] - self.gradients[k - 1]
        n = d.perp_ccw()
        return jump.dot(n.vec()) / n.norm2()

    def add_linear(self, e: Vec2) -> "PosHomCPWL":
        return PosHomCPWL(self.breaks, tuple(g + e for g in self.gradients))

    def sectors(self) -> List[Tuple[Direction, Direction]]:
        n = len(self.breaks)
        return [(self.breaks[k], self.breaks[(k + 1) % n]) for k in range(n)]

    def sector_samples(self) -> List[Direction]:
        """One direction strictly inside each sector."""
        if not self.breaks:
            return [_EAST]
        return [sample_inside_arc(a, b) for a, b in self.sectors()]

    def refined_samples(self) -> List[Direction]:
        """Samples of every sector of the breaks closed under negation."""
        breaks = sort_ccw(list(self.breaks) + [-d for d in self.breaks])
        if not breaks:
            return [_EAST, -_EAST]
        n = len(breaks)
        return [sample_inside_arc(breaks[k], breaks[(k + 1) % n]) for k in range(n)]


@dataclass(frozen=True)
class SymmetricDecomposition:
    s_part: PosHomCPWL
    e: Vec2

    def evaluate(self, p: Point2) -> Fraction:
        return self.s_part.evaluate(p) + self.e.dot(p)


def to_poshom(h: HingeFunction) -> PosHomCPWL:
    """Sector-gradient form of a syntactically homogeneous hinge function."""
    if h.base.c != 0:
        raise NotHomogeneous("base has a nonzero constant", term="base")
    for k, term in enumerate(h.terms):
        if term.c != 0:
            raise NotHomogeneous(f"term {k} has a nonzero constant", term=k)
    breaks = sort_ccw(d for t in h.break_lines() for d in (t.direction(), -t.direction()))
    if not breaks:
        return PosHomCPWL.linear(h.base.gradient())
    n = len(breaks)
    gradients = [h.gradient_at(sample_inside_arc(breaks[k], breaks[(k + 1) % n]).vec()) for k in range(n)]
    return PosHomCPWL.from_sectors(breaks, gradients)


def decompose_symmetric(f: PosHomCPWL) -> SymmetricDecomposition:
    """Split f into a centrally symmetric part plus a linear function e.x."""
    for d in sort_ccw(list(f.breaks) + [-d for d in f.breaks]):
        if f.jump_at(d) != f.jump_at(-d):
            raise NotDecomposable(d)
    e: Optional[Vec2] = None
    for u in f.refined_samples():
        avg = (f.gradient_for(u) + f.gradient_for(-u)).scale(Fraction(1, 2))
        if e is None:
            e = avg
        elif avg != e:
            raise InternalInconsistency(
                "antipodal gradient averages disagree", sample=[u.dx, u.dy]
            )
    return SymmetricDecomposition(s_part=f.add_linear(-e), e=e)


def peel_to_hinge(dec: SymmetricDecomposition) -> HingeFunction:
    """Rebuild a homogeneous hinge function from a symmetric decomposition.

    Each break line with jump lambda along n = perp_ccw(d) contributes
    (lambda / 2) * |n . x|; what remains must be linear.
    """
    s = dec.s_part
    terms: List[Tuple[Fraction, AffineForm]] = []
    for d in s.breaks:
        if d.canonical_line() != d:
            continue
        lam = s.jump_at(d)
        terms.append((lam / 2, AffineForm.linear(d.perp_ccw())))
    peeled = HingeFunction.from_terms(AffineForm(0, 0, 0), terms)

    residual: Optional[Vec2] = None
    for u in s.refined_samples():
        g = s.gradient_for(u) - peeled.gradient_at(u.vec())
        if residual is None:
            residual = g
        elif g != residual:
            raise InternalInconsistency("residual after peeling is not linear", sample=[u.dx, u.dy])
    total = residual + dec.e
    return peeled.add_affine(AffineForm(total.x, total.y, 0))
