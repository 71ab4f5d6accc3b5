"""
Acceptance regressions: reference functions with known answers and the
randomized property suites at full size.

The suites run through the evals runner with deep logging disabled, so
a failing case shows up here with the same details the harness logs.
"""

import pytest
import sympy
from fractions import Fraction

from evals.config import EvalConfig, SuiteConfig
from evals.runner import EvaluationRunner, check_cone_roundtrip
from evals.logging.deep_logger import DeepLogger
from hingeset.core.cones import DIM2, check_cone_condition
from hingeset.core.exact import AffineForm, Point2
from hingeset.core.planar import (
    PolytopalSet,
    check_local_condition,
    cone_to_set,
    connected_components,
    positivity_set,
    set_equal,
)
from hingeset.samples import even_fan
from hingeset.synthesis.coefficients import (
    coefficient_space,
    evaluation_matrix,
    hinge_from_coefficients,
    solve_hinge_coefficients,
)
from hingeset.synthesis.polygons import convex_cell_from_vertices

TRIANGLE_LINES = [
    AffineForm(1, -1, 0),
    AffineForm(1, 2, -2),
    AffineForm(2, 1, -2),
    AffineForm(1, 0, -1),
    AffineForm(0, 1, -1),
]
TRIANGLE_ZEROS = [Point2(0, 0), Point2(2, 0), Point2(0, 2), Point2(1, 0), Point2(0, 1), Point2(1, 1)]
TRIANGLE_COEFFICIENTS = [Fraction(c) for c in (0, 1, 1, -2, -1, -1, 2, 2)]


def run_suite(tmp_path, name: str, samples: int, **params):
    config = EvalConfig(suites={name: SuiteConfig(samples=samples, params=params)}, deep_logging=False)
    runner = EvaluationRunner(config, DeepLogger(output_dir=str(tmp_path), enabled=False), verbose=False)
    summary = runner.run_suite(name, config.suites[name])
    failures = [log for log in runner.logger.load_logs() if not log["passed"]]
    return summary, failures


# ============================================================================
# Reference functions
# ============================================================================

class TestReferenceFunctions:

    def test_triangle_from_linear_system(self, triangle_hinge):
        """Test the triangle coefficients solve the six zero-point equations."""
        values = evaluation_matrix(TRIANGLE_LINES, TRIANGLE_ZEROS).apply(TRIANGLE_COEFFICIENTS)
        assert all(v == 0 for v in values)
        h = hinge_from_coefficients(TRIANGLE_LINES, TRIANGLE_COEFFICIENTS)
        triangle = convex_cell_from_vertices([Point2(0, 0), Point2(2, 0), Point2(0, 2)])
        assert set_equal(positivity_set(h).set, PolytopalSet((triangle,))).equal

    def test_triangle_coefficients_solved_end_to_end(self):
        """Test the solver's candidates vanish on the zero points and span the triangle function."""
        candidates = solve_hinge_coefficients(TRIANGLE_LINES, TRIANGLE_ZEROS)
        assert candidates
        for h in candidates:
            assert all(h(p) == 0 for p in TRIANGLE_ZEROS)
        basis = coefficient_space(TRIANGLE_LINES, TRIANGLE_ZEROS)
        rows = [[sympy.Rational(c.numerator, c.denominator) for c in v] for v in basis + [TRIANGLE_COEFFICIENTS]]
        assert sympy.Matrix(rows).rank() == len(basis)

    def test_four_fan_components(self, four_fan):
        report = connected_components(positivity_set(four_fan).set)
        assert report.count == 4
        assert report.bounded == [False] * 4
        assert four_fan(Point2(100, 10)) == 19

    def test_three_fan_rejected_both_ways(self, fan3):
        verdict = check_cone_condition(fan3)
        assert not verdict.realizable
        assert verdict.g_span.kind == DIM2
        assert verdict.certificate
        assert not check_local_condition(cone_to_set(fan3)).passed

    @pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
    def test_even_fans_synthesize(self, m):
        passed, details = check_cone_roundtrip(even_fan(m), expect=True)
        assert passed, details

    def test_spot_values(self, triangle_hinge, h1):
        for vertex in (Point2(0, 0), Point2(2, 0), Point2(0, 2)):
            assert triangle_hinge(vertex) == 0
        assert triangle_hinge(Point2("2/3", "2/3")) == Fraction(8, 3)
        assert h1(Point2(1, 0)) == -1
        assert h1(Point2(2, 1)) == 2


# ============================================================================
# Property suites
# ============================================================================

@pytest.mark.slow
class TestPropertySuites:

    def test_cone_realizability(self, tmp_path):
        """Test 100 realizable cones synthesize and verify, plus 25 certified refusals."""
        summary, failures = run_suite(tmp_path, "cone_realizability", 100, max_arcs=6, max_fan=5, refusals=25)
        assert summary.failed == 0, failures[:3]
        assert summary.total == 100 + 25 + 5 + 3

    def test_local_condition(self, tmp_path):
        summary, failures = run_suite(tmp_path, "local_condition", 200, max_terms=6)
        assert summary.failed == 0, failures[:3]

    def test_local_gradients(self, tmp_path):
        summary, failures = run_suite(tmp_path, "local_gradients", 100, offsets=10)
        assert summary.failed == 0, failures[:3]

    def test_decomposition(self, tmp_path):
        summary, failures = run_suite(tmp_path, "decomposition", 100)
        assert summary.failed == 0, failures[:3]
        assert summary.total == 101

    def test_companion(self, tmp_path):
        summary, failures = run_suite(tmp_path, "companion", 50)
        assert summary.failed == 0, failures[:3]
        assert summary.total == 50 + 2 + 3 + 2
