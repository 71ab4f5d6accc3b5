"""Linear-system construction of hinge functions vanishing at given points."""

from fractions import Fraction
from typing import List, Sequence

from hingeset.core.exact import AffineForm, Point2, RatMatrix, nullspace
from hingeset.core.hinge import HingeFunction
from hingeset.logging_config import get_logger

logger = get_logger(__name__)


def evaluation_matrix(lines: Sequence[AffineForm], zero_points: Sequence[Point2]) -> RatMatrix:
    """Rows are zero points, columns the basis 1, x, y, |L1|, ..., |Lk|."""
    rows = [[Fraction(1), p.x, p.y] + [abs(line(p)) for line in lines] for p in zero_points]
    return RatMatrix.from_rows(rows, cols=3 + len(lines))


def hinge_from_coefficients(lines: Sequence[AffineForm], coefficients: Sequence[Fraction]) -> HingeFunction:
    """Hinge function c0 + c1*x + c2*y + sum c_{k+3} * |L_k|."""
    base = AffineForm(coefficients[1], coefficients[2], coefficients[0])
    return HingeFunction.from_terms(base, zip(coefficients[3:], lines))


def solve_hinge_coefficients(lines: Sequence[AffineForm], zero_points: Sequence[Point2]) -> List[HingeFunction]:
    """One candidate per basis vector of the solution space."""
    basis = coefficient_space(lines, zero_points)
    return [hinge_from_coefficients(lines, v) for v in basis]


def coefficient_space(lines: Sequence[AffineForm], zero_points: Sequence[Point2]) -> List[List[Fraction]]:
    basis = nullspace(evaluation_matrix(lines, zero_points))
    logger.debug("coefficient space: %d lines, %d zero points, dimension %d", len(lines), len(zero_points), len(basis))
    return basis
