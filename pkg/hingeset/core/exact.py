"""
Exact planar arithmetic.

Rationals are ``fractions.Fraction``; points, directions and affine forms
are frozen dataclasses over them. Circular order of directions uses an
exact pseudo-angle (the "diamond angle"), so no floating point is
involved anywhere in this module.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, List, Sequence, Tuple, Union

import sympy

from .errors import DegenerateArc, DegenerateInput

Rational = Fraction
RationalLike = Union[int, str, Fraction]


def to_rational(value: RationalLike) -> Fraction:
    """Parse an int, a "p/q" string or a Fraction into a Fraction."""
    if isinstance(value, bool):
        raise DegenerateInput(f"not a rational: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise DegenerateInput(f"not a rational: {value!r}") from e
    raise DegenerateInput(f"not a rational: {value!r}")


def format_rational(value: Fraction) -> str:
    """Canonical "p/q" (or "p") string."""
    return str(Fraction(value))


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


# =============================================================================
# Points
# =============================================================================

@dataclass(frozen=True, order=True)
class Point2:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", to_rational(self.x))
        object.__setattr__(self, "y", to_rational(self.y))

    def __add__(self, other: "Point2") -> "Point2":
        return Point2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point2") -> "Point2":
        return Point2(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "Point2":
        return Point2(-self.x, -self.y)

    def scale(self, k: RationalLike) -> "Point2":
        k = to_rational(k)
        return Point2(self.x * k, self.y * k)

    def dot(self, other: "Point2") -> Fraction:
        return self.x * other.x + self.y * other.y

    def cross(self, other: "Point2") -> Fraction:
        return self.x * other.y - self.y * other.x

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def __repr__(self) -> str:
        return f"({self.x}, {self.y})"


Vec2 = Point2

ORIGIN = Point2(0, 0)


def midpoint(p: Point2, q: Point2) -> Point2:
    return Point2((p.x + q.x) / 2, (p.y + q.y) / 2)


def centroid(points: Sequence[Point2]) -> Point2:
    n = len(points)
    return Point2(sum((p.x for p in points), Fraction(0)) / n, sum((p.y for p in points), Fraction(0)) / n)


# =============================================================================
# Directions
# =============================================================================

@dataclass(frozen=True)
class Direction:
    """A ray from the origin, stored as a primitive integer vector."""

    dx: int
    dy: int

    def __post_init__(self):
        if self.dx == 0 and self.dy == 0:
            raise DegenerateInput("direction must be nonzero")
        if gcd(self.dx, self.dy) != 1:
            raise DegenerateInput(f"direction ({self.dx}, {self.dy}) is not primitive")

    @classmethod
    def from_vector(cls, x: RationalLike, y: RationalLike) -> "Direction":
        """Primitive integer direction of a nonzero rational vector."""
        x, y = to_rational(x), to_rational(y)
        if x == 0 and y == 0:
            raise DegenerateInput("cannot take the direction of the zero vector")
        m = _lcm(x.denominator, y.denominator)
        ix, iy = int(x * m), int(y * m)
        g = gcd(ix, iy)
        return cls(ix // g, iy // g)

    @classmethod
    def of(cls, p: Point2) -> "Direction":
        return cls.from_vector(p.x, p.y)

    def __neg__(self) -> "Direction":
        return Direction(-self.dx, -self.dy)

    def vec(self) -> Point2:
        return Point2(self.dx, self.dy)

    def perp_ccw(self) -> "Direction":
        return Direction(-self.dy, self.dx)

    def perp_cw(self) -> "Direction":
        return Direction(self.dy, -self.dx)

    def dot(self, other: "Direction") -> int:
        return self.dx * other.dx + self.dy * other.dy

    def cross(self, other: "Direction") -> int:
        return self.dx * other.dy - self.dy * other.dx

    def norm2(self) -> int:
        return self.dx * self.dx + self.dy * self.dy

    def canonical_line(self) -> "Direction":
        """Representative of the line through this ray: first nonzero component positive."""
        if self.dx > 0 or (self.dx == 0 and self.dy > 0):
            return self
        return -self

    def __repr__(self) -> str:
        return f"<{self.dx}, {self.dy}>"


def direction_ccw(d1: Direction, d2: Direction) -> int:
    """Sign of the cross product d1 x d2."""
    c = d1.cross(d2)
    return (c > 0) - (c < 0)


def pseudo_angle(x: RationalLike, y: RationalLike) -> Fraction:
    """Exact monotone stand-in for atan2, taking values in [0, 4)."""
    x, y = to_rational(x), to_rational(y)
    if y >= 0:
        if x > 0 or (x == 0 and y > 0):
            return y / (x + y)
        return 1 + (-x) / (-x + y)
    if x < 0:
        return 2 + (-y) / (-x - y)
    return 3 + x / (x - y)


def angle_of(d: Direction) -> Fraction:
    return pseudo_angle(d.dx, d.dy)


def ccw_offset(d: Direction, base: Direction) -> Fraction:
    """Pseudo-angle of d measured counterclockwise from base, in [0, 4)."""
    return (angle_of(d) - angle_of(base)) % 4


def sort_ccw(directions: Iterable[Direction], base: Direction = Direction(1, 0)) -> List[Direction]:
    """Distinct directions sorted counterclockwise starting at base."""
    return sorted(set(directions), key=lambda d: ccw_offset(d, base))


def strictly_between(d: Direction, start: Direction, end: Direction) -> bool:
    """True if d lies in the open counterclockwise arc from start to end.

    start == end denotes the full circle minus that single ray.
    """
    if d == start or d == end:
        return False
    if start == end:
        return True
    return ccw_offset(d, start) < ccw_offset(end, start)


def sample_inside_arc(start: Direction, end: Direction) -> Direction:
    """Deterministic primitive direction strictly inside the open CCW arc.

    Two closed-form rules, no bisection or recursion:

    - arc shorter than a half-turn (``start x end > 0``): the reduced
      mediant ``start + end``;
    - arc of a half-turn or more: ``start`` turned a quarter-turn
      counterclockwise, which every such arc contains.
    """
    if start == end:
        raise DegenerateArc(f"arc from {start} to itself is degenerate", start=[start.dx, start.dy])
    if start.cross(end) > 0:
        return Direction.from_vector(start.dx + end.dx, start.dy + end.dy)
    return start.perp_ccw()


def arc_half_turn_compare(start: Direction, end: Direction) -> int:
    """-1, 0 or +1 as the open CCW arc is shorter, equal or longer than a half-turn."""
    if start == end:
        return 1
    c = start.cross(end)
    if c > 0:
        return -1
    if c == 0 and end == -start:
        return 0
    return 1


# =============================================================================
# Affine forms and maps
# =============================================================================

@dataclass(frozen=True)
class AffineForm:
    """(x, y) -> a*x + b*y + c"""

    a: Fraction
    b: Fraction
    c: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", to_rational(self.a))
        object.__setattr__(self, "b", to_rational(self.b))
        object.__setattr__(self, "c", to_rational(self.c))

    def __call__(self, p: Point2) -> Fraction:
        return self.a * p.x + self.b * p.y + self.c

    def key(self) -> Tuple[Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0 and self.c == 0

    def is_constant(self) -> bool:
        return self.a == 0 and self.b == 0

    def gradient(self) -> Vec2:
        return Point2(self.a, self.b)

    def linear_dot(self, d: Direction) -> Fraction:
        return self.a * d.dx + self.b * d.dy

    def __add__(self, other: "AffineForm") -> "AffineForm":
        return AffineForm(self.a + other.a, self.b + other.b, self.c + other.c)

    def __sub__(self, other: "AffineForm") -> "AffineForm":
        return AffineForm(self.a - other.a, self.b - other.b, self.c - other.c)

    def __neg__(self) -> "AffineForm":
        return AffineForm(-self.a, -self.b, -self.c)

    def scale(self, k: RationalLike) -> "AffineForm":
        k = to_rational(k)
        return AffineForm(self.a * k, self.b * k, self.c * k)

    def sign_normalized(self) -> Tuple["AffineForm", int]:
        """Return (form, s) with form = s * self and its first nonzero coefficient positive."""
        for coeff in (self.a, self.b, self.c):
            if coeff != 0:
                return (self, 1) if coeff > 0 else (-self, -1)
        return (self, 1)

    def primitive(self) -> "AffineForm":
        """Integer coefficients with gcd 1 and first nonzero coefficient positive."""
        if self.is_zero():
            return self
        m = _lcm(_lcm(self.a.denominator, self.b.denominator), self.c.denominator)
        ints = [int(v * m) for v in (self.a, self.b, self.c)]
        g = gcd(gcd(ints[0], ints[1]), ints[2])
        form = AffineForm(ints[0] // g, ints[1] // g, ints[2] // g)
        return form.sign_normalized()[0]

    def compose(self, transform: "AffineMap") -> "AffineForm":
        """The form x -> self(transform(x))."""
        t = transform
        return AffineForm(
            self.a * t.m11 + self.b * t.m21,
            self.a * t.m12 + self.b * t.m22,
            self.a * t.t1 + self.b * t.t2 + self.c,
        )

    def direction(self) -> Direction:
        """Direction of the zero line, (-b, a)."""
        return Direction.from_vector(-self.b, self.a)

    def foot(self) -> Point2:
        """Point of the zero line closest to the origin."""
        n2 = self.a * self.a + self.b * self.b
        return Point2(-self.c * self.a / n2, -self.c * self.b / n2)

    @classmethod
    def through(cls, p: Point2, q: Point2) -> "AffineForm":
        """Form vanishing on the line pq, positive to the left of p -> q."""
        d = q - p
        if d.is_zero():
            raise DegenerateInput("cannot build a line through two equal points")
        return cls(-d.y, d.x, d.y * p.x - d.x * p.y)

    @classmethod
    def linear(cls, n: Union[Direction, Point2]) -> "AffineForm":
        if isinstance(n, Direction):
            return cls(n.dx, n.dy, 0)
        return cls(n.x, n.y, 0)

    def __repr__(self) -> str:
        return f"[{self.a}x + {self.b}y + {self.c}]"


def intersect(l1: AffineForm, l2: AffineForm) -> Point2:
    """Intersection point of two non-parallel lines."""
    det = l1.a * l2.b - l1.b * l2.a
    if det == 0:
        raise DegenerateInput("lines are parallel")
    x = (l1.b * l2.c - l2.b * l1.c) / det
    y = (l2.a * l1.c - l1.a * l2.c) / det
    return Point2(x, y)


@dataclass(frozen=True)
class AffineMap:
    """x -> M x + t"""

    m11: Fraction
    m12: Fraction
    m21: Fraction
    m22: Fraction
    t1: Fraction = Fraction(0)
    t2: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("m11", "m12", "m21", "m22", "t1", "t2"):
            object.__setattr__(self, name, to_rational(getattr(self, name)))

    def __call__(self, p: Point2) -> Point2:
        return Point2(self.m11 * p.x + self.m12 * p.y + self.t1, self.m21 * p.x + self.m22 * p.y + self.t2)

    @property
    def det(self) -> Fraction:
        return self.m11 * self.m22 - self.m12 * self.m21

    def inverse(self) -> "AffineMap":
        det = self.det
        if det == 0:
            raise DegenerateInput("affine map is not invertible")
        i11, i12 = self.m22 / det, -self.m12 / det
        i21, i22 = -self.m21 / det, self.m11 / det
        return AffineMap(i11, i12, i21, i22, -(i11 * self.t1 + i12 * self.t2), -(i21 * self.t1 + i22 * self.t2))

    @classmethod
    def translation(cls, v: Point2) -> "AffineMap":
        return cls(1, 0, 0, 1, v.x, v.y)

    @classmethod
    def identity(cls) -> "AffineMap":
        return cls(1, 0, 0, 1)


# =============================================================================
# Linear algebra
# =============================================================================

@dataclass(frozen=True)
class RatMatrix:
    rows: int
    cols: int
    entries: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(to_rational(e) for e in self.entries))
        if len(self.entries) != self.rows * self.cols:
            raise DegenerateInput(f"expected {self.rows * self.cols} entries, got {len(self.entries)}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[RationalLike]], cols: int = 0) -> "RatMatrix":
        width = len(rows[0]) if rows else cols
        return cls(len(rows), width, tuple(e for row in rows for e in row))

    def row(self, i: int) -> Tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def apply(self, v: Sequence[Fraction]) -> List[Fraction]:
        return [sum((a * b for a, b in zip(self.row(i), v)), Fraction(0)) for i in range(self.rows)]


def _from_sympy(value) -> Fraction:
    r = sympy.Rational(value)
    return Fraction(int(r.p), int(r.q))


def nullspace(m: RatMatrix) -> List[List[Fraction]]:
    """Exact right nullspace basis in reduced echelon parameterization."""
    if m.cols == 0:
        return []
    if m.rows == 0:
        return [[Fraction(int(i == j)) for i in range(m.cols)] for j in range(m.cols)]
    mat = sympy.Matrix(m.rows, m.cols, [sympy.Rational(e.numerator, e.denominator) for e in m.entries])
    return [[_from_sympy(v) for v in vec] for vec in mat.nullspace()]


def solve_2x2(d1: Direction, d2: Direction, v1: Fraction, v2: Fraction) -> Vec2:
    """Vector g with g.d1 = v1 and g.d2 = v2 (Cramer's rule)."""
    det = d1.cross(d2)
    if det == 0:
        raise DegenerateInput("directions are parallel")
    gx = Fraction(v1 * d2.dy - v2 * d1.dy, det)
    gy = Fraction(d1.dx * v2 - d2.dx * v1, det)
    return Point2(gx, gy)
