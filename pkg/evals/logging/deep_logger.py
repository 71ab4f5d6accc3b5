"""
Deep Logger Utility

Centralized logging utility for capturing every property case of an
evaluation run in structured JSONL format.
"""

import json
from datetime import datetime
from pathlib import Path
from typing import Dict, List, Optional

from .log_schema import CaseLog, RunMetadata


class DeepLogger:
    """Deep logger for evaluation runs"""

    def __init__(self, output_dir: str = "evals/results", run_id: Optional[str] = None, enabled: bool = True):
        """
        Initialize deep logger

        Args:
            output_dir: Directory to save logs
            run_id: Unique run identifier (auto-generated if not provided)
            enabled: When False, cases are kept in memory only
        """
        self.output_dir = Path(output_dir)
        self.enabled = enabled

        # Generate run ID if not provided
        if run_id is None:
            run_id = datetime.now().strftime("%Y%m%d_%H%M%S")
        self.run_id = run_id

        self.run_dir = self.output_dir / f"run_{self.run_id}"
        self.deep_logs_path = self.run_dir / "deep_logs.jsonl"
        self.metadata_path = self.run_dir / "run_metadata.json"
        self._memory: List[dict] = []

        if self.enabled:
            self.run_dir.mkdir(parents=True, exist_ok=True)

    def log_case(self, case_log: CaseLog):
        """
        Log a single property case

        Args:
            case_log: CaseLog object
        """
        log_dict = case_log.model_dump()
        self._memory.append(log_dict)
        if not self.enabled:
            return

        with open(self.deep_logs_path, 'a') as f:
            f.write(json.dumps(log_dict, sort_keys=True) + '\n')

    def save_metadata(self, metadata: RunMetadata):
        if not self.enabled:
            return
        with open(self.metadata_path, 'w') as f:
            json.dump(metadata.model_dump(), f, indent=2, sort_keys=True)

    def load_logs(self) -> List[dict]:
        """
        Load all case logs from this run

        Returns:
            List of case log dictionaries
        """
        if not self.deep_logs_path.exists():
            return list(self._memory)

        logs = []
        with open(self.deep_logs_path, 'r') as f:
            for line in f:
                if line.strip():
                    logs.append(json.loads(line))
        return logs

    def get_summary(self) -> dict:
        """
        Get summary statistics for this run

        Returns:
            Dictionary with totals and a per-suite breakdown
        """
        logs = self.load_logs()

        if not logs:
            return {"total_cases": 0, "passed": 0, "failed": 0, "pass_rate": 0.0, "suite_breakdown": {}}

        total = len(logs)
        passed = sum(1 for log in logs if log['passed'])

        suite_stats: Dict[str, dict] = {}
        for log in logs:
            stats = suite_stats.setdefault(log['suite'], {"total": 0, "passed": 0, "duration_ms": 0.0})
            stats["total"] += 1
            stats["duration_ms"] += log['duration_ms']
            if log['passed']:
                stats["passed"] += 1

        for stats in suite_stats.values():
            stats["pass_rate"] = stats["passed"] / stats["total"] if stats["total"] > 0 else 0.0

        return {
            "total_cases": total,
            "passed": passed,
            "failed": total - passed,
            "pass_rate": passed / total,
            "suite_breakdown": suite_stats,
        }

    def print_summary(self):
        """Print summary statistics to console"""
        summary = self.get_summary()

        print("\n" + "="*60)
        print(f"Evaluation Run Summary: {self.run_id}")
        print("="*60)
        print(f"Total Cases: {summary['total_cases']}")
        print(f"Passed: {summary['passed']}")
        print(f"Failed: {summary['failed']}")
        print(f"Pass Rate: {summary['pass_rate']:.2%}")

        if summary["suite_breakdown"]:
            print("\n" + "-"*60)
            print("Breakdown by Suite:")
            print("-"*60)
            for suite, stats in sorted(summary["suite_breakdown"].items()):
                print(
                    f"{suite:24s}: {stats['passed']}/{stats['total']} "
                    f"({stats['pass_rate']:.1%}, {stats['duration_ms'] / 1000:.1f}s)"
                )

        print("="*60 + "\n")

    def save_summary(self, output_path: Optional[str] = None):
        if not self.enabled:
            return
        summary = self.get_summary()

        if output_path is None:
            output_path = self.run_dir / "summary.json"

        with open(output_path, 'w') as f:
            json.dump(summary, f, indent=2, sort_keys=True)
