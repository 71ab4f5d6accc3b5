"""
Tests for the property-suite harness: configuration, runner, deep logs
and its CLI.
"""

import json
from dataclasses import replace

import pytest
from typer.testing import CliRunner

from evals.cli import app
from evals.config import SUITES, EvalConfig, SuiteConfig
from evals.logging import CaseLog, DeepLogger
from evals.runner import (
    EvaluationRunner,
    check_boundary_complement,
    check_cone_roundtrip,
    check_decomposition,
    check_gradient_identity,
    check_hinge_local_condition,
    check_not_decomposable,
    check_polygon,
    refusal_is_certified,
    unbounded_quadrilateral,
)
from hingeset.core.cones import DIM0, check_cone_condition, complement_of_boundary
from hingeset.core.exact import Direction, Point2
from hingeset.samples import three_arc_cone

runner = CliRunner()


def small_config(tmp_path, **suites) -> EvalConfig:
    return EvalConfig(
        suites={name: SuiteConfig(samples=n) for name, n in suites.items()},
        output_dir=str(tmp_path),
    )


# ============================================================================
# Configuration
# ============================================================================

class TestEvalConfig:

    def test_defaults_cover_every_suite(self):
        assert list(EvalConfig().suites) == SUITES

    def test_yaml_round_trip(self, tmp_path):
        config = EvalConfig(random_seed=7, parallel_workers=3)
        config.suites["local_gradients"].params["offsets"] = 4
        path = tmp_path / "nested" / "config.yaml"
        config.save(str(path))

        loaded = EvalConfig.from_yaml(str(path))
        assert loaded.random_seed == 7
        assert loaded.parallel_workers == 3
        assert loaded.suites["local_gradients"].get("offsets", 10) == 4
        assert loaded.to_dict() == config.to_dict()

    def test_unknown_suite_in_yaml(self, tmp_path):
        path = tmp_path / "bad.yaml"
        path.write_text("suites:\n  nonsense:\n    samples: 1\n")
        with pytest.raises(ValueError):
            EvalConfig.from_yaml(str(path))

    def test_select(self):
        selected = EvalConfig(random_seed=5).select(["companion"])
        assert list(selected.suites) == ["companion"]
        assert selected.random_seed == 5
        with pytest.raises(ValueError):
            EvalConfig().select(["companion", "nonsense"])


# ============================================================================
# Property checks
# ============================================================================

class TestChecks:

    def test_local_condition_on_reference(self, h1):
        passed, details = check_hinge_local_condition(h1)
        assert passed
        assert details["vertices_checked"] > 0

    def test_gradient_identity_at_vertex(self, h1):
        passed, details = check_gradient_identity(h1, [Point2(0, 0), Point2(1, 1)], offsets=4)
        assert passed, details

    def test_decomposition_round_trip(self, abs_sum):
        passed, _ = check_decomposition(abs_sum)
        assert passed

    def test_max_xy0_refused(self):
        passed, details = check_not_decomposable()
        assert passed
        assert len(details["direction"]) == 2

    def test_polygon_checks(self, unit_square, reference_triangle):
        assert check_polygon(unit_square)[0]
        assert check_polygon(unbounded_quadrilateral())[0]
        assert check_boundary_complement(reference_triangle)[0]

    def test_boundary_complement_can_lose_realizability(self):
        """Test a realizable cone whose boundary complement is refused with a spanning certificate."""
        source = three_arc_cone()
        assert check_cone_roundtrip(source, expect=True)[0]
        comp = complement_of_boundary(source)
        verdict = check_cone_condition(comp)
        assert not verdict.realizable
        assert verdict.g_span.kind == DIM0
        assert len(verdict.certificate) == 3
        assert refusal_is_certified(comp, verdict)
        passed, details = check_cone_roundtrip(comp)
        assert passed, details
        assert details["realizable"] is False

    def test_refusal_certificate_checked(self, fan3, quadrant):
        verdict = check_cone_condition(fan3)
        assert refusal_is_certified(fan3, verdict)
        assert not refusal_is_certified(fan3, replace(verdict, certificate=()))
        # boundary rays are not in the cone, so not in R
        assert not refusal_is_certified(fan3, replace(verdict, certificate=(Direction(1, 1),)))
        dim0 = replace(check_cone_condition(quadrant), realizable=False, certificate=(Direction(1, 1),))
        assert not refusal_is_certified(quadrant, dim0)


# ============================================================================
# Runner and deep logs
# ============================================================================

class TestRunner:

    def test_seeded_cases_are_reproducible(self, tmp_path):
        config = small_config(tmp_path, cone_realizability=5)
        first = EvaluationRunner(config, DeepLogger(str(tmp_path), run_id="a", enabled=False), verbose=False)
        second = EvaluationRunner(config, DeepLogger(str(tmp_path), run_id="b", enabled=False), verbose=False)
        suite = config.suites["cone_realizability"]
        subjects = [c.subject for c in first.build_cases("cone_realizability", suite)]
        assert subjects == [c.subject for c in second.build_cases("cone_realizability", suite)]

    def test_unknown_suite(self, tmp_path):
        runner_ = EvaluationRunner(small_config(tmp_path), DeepLogger(str(tmp_path), enabled=False), verbose=False)
        with pytest.raises(ValueError):
            runner_.build_cases("nonsense", SuiteConfig(samples=1))

    def test_run_writes_logs(self, tmp_path):
        config = small_config(tmp_path, decomposition=3, local_condition=3)
        runner_ = EvaluationRunner(config, DeepLogger(str(tmp_path), run_id="test"), verbose=False)
        results = runner_.run()

        assert results["decomposition"].total == 4
        assert results["local_condition"].total == 3
        assert all(r.failed == 0 for r in results.values())

        run_dir = tmp_path / "run_test"
        lines = (run_dir / "deep_logs.jsonl").read_text().splitlines()
        assert len(lines) == 7
        assert {json.loads(line)["suite"] for line in lines} == {"decomposition", "local_condition"}
        metadata = json.loads((run_dir / "run_metadata.json").read_text())
        assert metadata["total_cases"] == 7
        assert metadata["cases_failed"] == 0
        assert json.loads((run_dir / "summary.json").read_text())["passed"] == 7

    def test_parallel_matches_serial(self, tmp_path):
        serial = small_config(tmp_path, local_condition=4)
        parallel = small_config(tmp_path, local_condition=4)
        parallel.parallel_workers = 3
        logs = []
        for i, config in enumerate((serial, parallel)):
            r = EvaluationRunner(config, DeepLogger(str(tmp_path), run_id=str(i), enabled=False), verbose=False)
            r.run_suite("local_condition", config.suites["local_condition"])
            logs.append([(log["case_id"], log["passed"]) for log in r.logger.load_logs()])
        assert logs[0] == logs[1]


class TestDeepLogger:

    def test_summary_breakdown(self, tmp_path):
        logger = DeepLogger(str(tmp_path), run_id="x")
        logger.log_case(CaseLog(case_id="a-0", suite="a", passed=True, duration_ms=1.0))
        logger.log_case(CaseLog(case_id="a-1", suite="a", passed=False, duration_ms=3.0, error="boom"))
        logger.log_case(CaseLog(case_id="b-0", suite="b", passed=True, duration_ms=2.0))

        summary = logger.get_summary()
        assert summary["total_cases"] == 3
        assert summary["failed"] == 1
        assert summary["suite_breakdown"]["a"]["pass_rate"] == 0.5
        assert summary["suite_breakdown"]["b"]["duration_ms"] == 2.0

    def test_disabled_keeps_memory_only(self, tmp_path):
        logger = DeepLogger(str(tmp_path), run_id="mem", enabled=False)
        logger.log_case(CaseLog(case_id="a-0", suite="a", passed=True, duration_ms=1.0))
        assert not (tmp_path / "run_mem").exists()
        assert [log["case_id"] for log in logger.load_logs()] == ["a-0"]

    def test_empty_summary(self, tmp_path):
        assert DeepLogger(str(tmp_path), run_id="none").get_summary()["total_cases"] == 0


# ============================================================================
# CLI
# ============================================================================

class TestEvalsCli:

    def test_run_and_analyze(self, tmp_path):
        result = runner.invoke(app, [
            "run", "--suite", "decomposition", "--samples", "2", "--output", str(tmp_path),
        ])
        assert result.exit_code == 0, result.output
        assert "EVALUATION COMPLETE" in result.stdout

        run_dirs = list(tmp_path.glob("run_*"))
        assert len(run_dirs) == 1
        analyzed = runner.invoke(app, ["analyze", run_dirs[0].name, "--output", str(tmp_path), "--summary"])
        assert analyzed.exit_code == 0
        assert "Total Cases: 3" in analyzed.stdout

    def test_run_unknown_suite(self, tmp_path):
        result = runner.invoke(app, ["run", "--suite", "nonsense", "--output", str(tmp_path)])
        assert result.exit_code == 1
