"""
Evaluation Runner

Core orchestrator for the property suites. Each suite draws seeded random
instances (plus a few fixed reference instances), checks one property
exactly, and logs every case through the deep logger.
"""

import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime
from typing import Any, Callable, Dict, List, Optional, Tuple

from hingeset.core.cones import (
    DIM1,
    DIM2,
    PolytopalCone,
    RealizabilityVerdict,
    check_cone_condition,
    complement_of_boundary,
)
from hingeset.core.errors import HingeSetError, NotDecomposable, NotRealizable
from hingeset.core.exact import AffineForm, Direction, Point2
from hingeset.core.hinge import (
    HingeFunction,
    admissible_direction,
    admissible_step,
    central_gradient_sum,
    decompose_symmetric,
    gradient_pair_sum,
    lines_through,
    peel_to_hinge,
    to_poshom,
)
from hingeset.core.planar import (
    ConvexCell,
    PolytopalSet,
    check_local_condition,
    cone_to_set,
    functions_equal,
    positivity_set,
    set_equal,
)
from hingeset.logging_config import get_logger
from hingeset.models.schema import CellModel, ConeModel, HingeModel, to_jsonable
from hingeset.samples import (
    even_fan,
    max_xy0,
    odd_fan,
    random_cone,
    random_convex_polygon,
    random_hinge,
    random_homogeneous_hinge,
    random_point,
    random_realizable_cone,
    three_arc_cone,
)
from hingeset.synthesis.cone_synthesis import synthesize_cone
from hingeset.synthesis.polygons import (
    boundary_complement_set,
    convex_cell_from_vertices,
    polygon_outline,
    synthesize_boundary_complement,
    synthesize_convex_polygon,
)

from .config import EvalConfig, SuiteConfig
from .logging.deep_logger import DeepLogger
from .logging.log_schema import CaseLog, RunMetadata, SuiteSummary

logger = get_logger(__name__)

# A check returns (passed, details).
Check = Callable[[], Tuple[bool, Dict[str, Any]]]


@dataclass
class Case:
    """One property instance, ready to run."""
    case_id: str
    subject: Optional[Dict[str, Any]]
    check: Check
    meta: Dict[str, Any] = field(default_factory=dict)


def _cone_subject(cone: PolytopalCone) -> Dict[str, Any]:
    return to_jsonable(ConeModel.from_core(cone))


def _hinge_subject(h: HingeFunction) -> Dict[str, Any]:
    return to_jsonable(HingeModel.from_core(h))


def _cell_subject(cell: ConvexCell) -> Dict[str, Any]:
    return to_jsonable(CellModel.from_core(cell))


# =============================================================================
# Property checks
# =============================================================================

def refusal_is_certified(cone: PolytopalCone, verdict: RealizabilityVerdict) -> bool:
    """Check a refusal's certificate from scratch: its directions lie in R and their hull meets span(G)."""
    cert = verdict.certificate
    if not cert or not all(cone.contains(d) and not cone.contains(-d) for d in cert):
        return False
    kind = verdict.g_span.kind
    if kind == DIM2:
        return True
    if kind == DIM1:
        line = verdict.g_span.line
        if len(cert) == 1:
            return cert[0].cross(line) == 0
        n = line.perp_ccw()
        return len(cert) == 2 and n.dot(cert[0]) <= 0 <= n.dot(cert[1])
    if len(cert) == 2:
        return cert[1] == -cert[0]
    if len(cert) != 3:
        return False
    crosses = (cert[0].cross(cert[1]), cert[1].cross(cert[2]), cert[2].cross(cert[0]))
    return all(c > 0 for c in crosses) or all(c < 0 for c in crosses)


def check_cone_roundtrip(cone: PolytopalCone, expect: Optional[bool] = None) -> Tuple[bool, Dict[str, Any]]:
    """Realizable cones synthesize to an exact hinge; the others are refused with a sound certificate."""
    verdict = check_cone_condition(cone)
    details: Dict[str, Any] = {"realizable": verdict.realizable, "g_span": verdict.g_span.kind}
    if expect is not None and verdict.realizable != expect:
        details["expected"] = expect
        return False, details
    if not verdict.realizable:
        details["certificate"] = [[d.dx, d.dy] for d in verdict.certificate]
        if not refusal_is_certified(cone, verdict):
            details["reason"] = "certificate does not meet span(G)"
            return False, details
        try:
            synthesize_cone(cone)
        except NotRealizable:
            return True, details
        details["reason"] = "synthesis accepted a non-realizable cone"
        return False, details
    h = synthesize_cone(cone)
    comparison = set_equal(positivity_set(h).set, cone_to_set(cone))
    details["terms"] = len(h.terms)
    if not comparison.equal:
        details["counterexample"] = [str(comparison.counterexample.x), str(comparison.counterexample.y)]
    return comparison.equal, details


def check_hinge_local_condition(h: HingeFunction) -> Tuple[bool, Dict[str, Any]]:
    """Every positivity set of a hinge function passes the local cone scan."""
    result = positivity_set(h)
    report = check_local_condition(result.set)
    details: Dict[str, Any] = {"cells": len(result.set.cells), "vertices_checked": report.checked}
    if not report.passed:
        details["failed_at"] = [str(report.point.x), str(report.point.y)]
    return report.passed, details


def _offset_vectors(h: HingeFunction, p: Point2, offsets: int) -> List[Point2]:
    """Short vectors from p: admissible directions plus the break lines through p."""
    directions: List[Direction] = []
    start = 0
    while len(directions) < offsets:
        d = admissible_direction(h, p, start)
        directions.append(d)
        start = d.dy + 1
    directions += [t.direction() for t in lines_through(h, p)]
    return [d.vec().scale(admissible_step(h, p, d)) for d in directions]


def check_gradient_identity(h: HingeFunction, centers: List[Point2], offsets: int) -> Tuple[bool, Dict[str, Any]]:
    """h(p+u) - h(p-u) = gamma.u and grad h(q) + grad h(2p-q) = gamma near every center."""
    checked = 0
    for p in centers:
        gamma = central_gradient_sum(h, p)
        for u in _offset_vectors(h, p, offsets):
            checked += 1
            if h.evaluate(p + u) - h.evaluate(p - u) != gamma.dot(u):
                return False, {"center": [str(p.x), str(p.y)], "offset": [str(u.x), str(u.y)], "checked": checked}
            if not lines_through(h, p + u):
                if gradient_pair_sum(h, p, p + u) != gamma:
                    return False, {"center": [str(p.x), str(p.y)], "gradient_offset": [str(u.x), str(u.y)]}
    return True, {"centers": len(centers), "checked": checked}


def check_decomposition(h: HingeFunction) -> Tuple[bool, Dict[str, Any]]:
    """Homogeneous hinge -> sector form -> symmetric split -> peeled hinge is the identity."""
    f = to_poshom(h)
    rebuilt = peel_to_hinge(decompose_symmetric(f))
    witness = functions_equal(h, rebuilt)
    details: Dict[str, Any] = {"breaks": len(f.breaks), "rebuilt_terms": len(rebuilt.terms)}
    if witness is not None:
        details["differs_at"] = [str(witness.x), str(witness.y)]
    return witness is None, details


def check_not_decomposable() -> Tuple[bool, Dict[str, Any]]:
    try:
        decompose_symmetric(max_xy0())
    except NotDecomposable as e:
        return True, {"direction": e.details.get("direction")}
    return False, {"reason": "max(x, y, 0) was decomposed"}


def check_polygon(cell: ConvexCell) -> Tuple[bool, Dict[str, Any]]:
    h = synthesize_convex_polygon(cell)
    comparison = set_equal(positivity_set(h).set, PolytopalSet((cell,)))
    return comparison.equal, {"terms": len(h.terms)}


def check_boundary_complement(cell: ConvexCell) -> Tuple[bool, Dict[str, Any]]:
    h, eps = synthesize_boundary_complement(cell)
    target = boundary_complement_set(cell, polygon_outline(cell).supporting)
    comparison = set_equal(positivity_set(h).set, target)
    return comparison.equal, {"epsilon": str(eps), "terms": len(h.terms)}


def unit_square() -> ConvexCell:
    return convex_cell_from_vertices([Point2(0, 0), Point2(1, 0), Point2(1, 1), Point2(0, 1)])


def unbounded_quadrilateral() -> ConvexCell:
    """{x > 0, y > 0, 2x + y > 2, x + 2y > 2}: two vertices, unbounded."""
    return ConvexCell((AffineForm(1, 0, 0), AffineForm(0, 1, 0), AffineForm(2, 1, -2), AffineForm(1, 2, -2)))


def reference_triangle() -> ConvexCell:
    return convex_cell_from_vertices([Point2(0, 0), Point2(2, 0), Point2(0, 2)])


# =============================================================================
# Runner
# =============================================================================

class EvaluationRunner:
    """
    Main evaluation runner that orchestrates:
    1. Building seeded cases for each configured suite
    2. Running the cases (optionally on a thread pool)
    3. Logging every case and summarizing per suite
    """

    def __init__(self, config: EvalConfig, deep_logger: Optional[DeepLogger] = None, verbose: bool = True):
        """
        Initialize evaluation runner.

        Args:
            config: Evaluation configuration
            deep_logger: Logger to write cases to (created from config if omitted)
            verbose: Print progress to stdout
        """
        self.config = config
        self.verbose = verbose
        self.logger = deep_logger or DeepLogger(output_dir=config.output_dir, enabled=config.deep_logging)
        self._builders: Dict[str, Callable[[random.Random, SuiteConfig], List[Case]]] = {
            "cone_realizability": self._cone_cases,
            "local_condition": self._hinge_cases,
            "local_gradients": self._gradient_cases,
            "decomposition": self._decomposition_cases,
            "companion": self._companion_cases,
        }

        if self.verbose:
            print(f"✓ Evaluation runner initialized")
            print(f"  Run ID: {self.logger.run_id}")
            print(f"  Output: {self.logger.run_dir}")

    def run(self) -> Dict[str, SuiteSummary]:
        """
        Run every configured suite.

        Returns:
            Dictionary mapping suite names to summaries
        """
        metadata = RunMetadata(
            run_id=self.logger.run_id,
            started_at=datetime.now().isoformat(),
            config=self.config.to_dict(),
        )
        results: Dict[str, SuiteSummary] = {}
        for name, suite_config in self.config.suites.items():
            if self.verbose:
                print("\n" + "="*60)
                print(f"Running suite: {name} ({suite_config.samples} samples)")
                print("="*60)
            results[name] = self.run_suite(name, suite_config)

        metadata.completed_at = datetime.now().isoformat()
        metadata.total_cases = sum(r.total for r in results.values())
        metadata.cases_passed = sum(r.passed for r in results.values())
        metadata.cases_failed = sum(r.failed for r in results.values())
        self.logger.save_metadata(metadata)
        self.logger.save_summary()
        return results

    def build_cases(self, name: str, suite_config: SuiteConfig) -> List[Case]:
        if name not in self._builders:
            raise ValueError(f"Unknown suite: {name}")
        rng = random.Random(f"{self.config.random_seed}:{name}")
        return self._builders[name](rng, suite_config)

    def run_suite(self, name: str, suite_config: SuiteConfig) -> SuiteSummary:
        cases = self.build_cases(name, suite_config)
        start = time.time()
        if self.config.parallel_workers > 1:
            with ThreadPoolExecutor(max_workers=self.config.parallel_workers) as pool:
                logs = list(pool.map(lambda c: self._execute(name, c), cases))
        else:
            logs = [self._execute(name, c) for c in cases]

        for log in logs:
            self.logger.log_case(log)
            if self.verbose and not log.passed:
                print(f"  ✗ {log.case_id}: {log.error or log.details}")

        passed = sum(1 for log in logs if log.passed)
        summary = SuiteSummary(
            suite=name,
            total=len(logs),
            passed=passed,
            failed=len(logs) - passed,
            duration_ms=(time.time() - start) * 1000,
        )
        logger.info("suite %s: %d/%d passed", name, summary.passed, summary.total)
        if self.verbose:
            print(f"  {summary.passed}/{summary.total} passed ({summary.pass_rate:.1%})")
        return summary

    def _execute(self, suite: str, case: Case) -> CaseLog:
        """Run one case; any exception counts as a failure."""
        start = time.time()
        error = None
        try:
            passed, details = case.check()
        except HingeSetError as e:
            passed, details, error = False, e.to_dict(), f"{e.code}: {e.message}"
        except Exception as e:
            logger.exception("case %s raised", case.case_id)
            passed, details, error = False, {}, f"{type(e).__name__}: {e}"
        return CaseLog(
            case_id=case.case_id,
            suite=suite,
            passed=passed,
            duration_ms=(time.time() - start) * 1000,
            subject=case.subject,
            details={**case.meta, **to_jsonable(details)},
            error=error,
        )

    # -------------------------------------------------------------------------
    # Case builders
    # -------------------------------------------------------------------------

    def _cone_cases(self, rng: random.Random, suite: SuiteConfig) -> List[Case]:
        max_arcs = suite.get("max_arcs", 6)
        cases = []
        for i in range(suite.samples):
            cone = random_realizable_cone(rng, max_arcs)
            cases.append(Case(
                f"cone_realizability-{i:04d}", _cone_subject(cone),
                lambda c=cone: check_cone_roundtrip(c, expect=True),
            ))
        target = suite.get("refusals", max(1, suite.samples // 4))
        refusals = 0
        for _ in range(1000 * target):
            if refusals == target:
                break
            cone = random_cone(rng, max_arcs)
            if check_cone_condition(cone).realizable:
                continue
            cases.append(Case(
                f"cone_realizability-refusal-{refusals:04d}", _cone_subject(cone),
                lambda c=cone: check_cone_roundtrip(c, expect=False), {"refusal": True},
            ))
            refusals += 1
        for m in range(1, suite.get("max_fan", 5) + 1):
            cone = even_fan(m)
            cases.append(Case(
                f"cone_realizability-fan{2 * m}", _cone_subject(cone),
                lambda c=cone: check_cone_roundtrip(c, expect=True), {"fan": 2 * m},
            ))
        for n in (3, 5, 7):
            cone = odd_fan(n)
            cases.append(Case(
                f"cone_realizability-fan{n}", _cone_subject(cone),
                lambda c=cone: check_cone_roundtrip(c, expect=False), {"fan": n},
            ))
        return cases

    def _hinge_cases(self, rng: random.Random, suite: SuiteConfig) -> List[Case]:
        cases = []
        for i in range(suite.samples):
            h = random_hinge(rng, suite.get("max_terms", 6))
            cases.append(Case(f"local_condition-{i:04d}", _hinge_subject(h), lambda h=h: check_hinge_local_condition(h)))
        return cases

    def _gradient_cases(self, rng: random.Random, suite: SuiteConfig) -> List[Case]:
        offsets = suite.get("offsets", 10)
        cases = []
        for i in range(suite.samples):
            h = random_hinge(rng, suite.get("max_terms", 6))
            vertices = [v.point for v in positivity_set(h).arrangement.vertices]
            centers = vertices + [random_point(rng) for _ in range(2)]
            cases.append(Case(
                f"local_gradients-{i:04d}", _hinge_subject(h),
                lambda h=h, centers=centers: check_gradient_identity(h, centers, offsets),
            ))
        return cases

    def _decomposition_cases(self, rng: random.Random, suite: SuiteConfig) -> List[Case]:
        cases = []
        for i in range(suite.samples):
            h = random_homogeneous_hinge(rng, suite.get("max_terms", 6))
            cases.append(Case(f"decomposition-{i:04d}", _hinge_subject(h), lambda h=h: check_decomposition(h)))
        cases.append(Case("decomposition-max_xy0", None, check_not_decomposable))
        return cases

    def _companion_cases(self, rng: random.Random, suite: SuiteConfig) -> List[Case]:
        # Removing the boundary of a realizable cone does not keep it realizable,
        # so each verdict is checked on its own: synthesis or a certified refusal.
        cases = []
        for i in range(suite.samples):
            cone = complement_of_boundary(random_realizable_cone(rng, suite.get("max_arcs", 6)))
            cases.append(Case(f"companion-cone-{i:04d}", _cone_subject(cone), lambda c=cone: check_cone_roundtrip(c)))
        source = three_arc_cone()
        cases.append(Case(
            "companion-cone-three_arc", _cone_subject(source),
            lambda: check_cone_roundtrip(source, expect=True),
        ))
        cases.append(Case(
            "companion-cone-three_arc-complement", _cone_subject(complement_of_boundary(source)),
            lambda: check_cone_roundtrip(complement_of_boundary(source), expect=False),
        ))

        polygons = {
            "square": unit_square(),
            "pentagon": convex_cell_from_vertices(random_convex_polygon(rng, 5)),
            "unbounded": unbounded_quadrilateral(),
        }
        for label, cell in polygons.items():
            cases.append(Case(f"companion-polygon-{label}", _cell_subject(cell), lambda c=cell: check_polygon(c)))
        for label, cell in (("square", unit_square()), ("triangle", reference_triangle())):
            cases.append(Case(
                f"companion-boundary-{label}", _cell_subject(cell),
                lambda c=cell: check_boundary_complement(c),
            ))
        return cases
