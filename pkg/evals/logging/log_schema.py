"""
Pydantic schemas for deep logging

Defines the structured records written for every property case of an
evaluation run, plus the run-level metadata.
"""

from datetime import datetime
from typing import Any, Dict, Optional

from pydantic import BaseModel, Field


class CaseLog(BaseModel):
    """Complete log for a single property case"""
    case_id: str
    suite: str  # 'cone_realizability', 'local_condition', ...
    timestamp: str = Field(default_factory=lambda: datetime.now().isoformat())
    passed: bool
    duration_ms: float
    subject: Optional[Dict[str, Any]] = None  # the cone, hinge or polygon under test, as schema JSON
    details: Dict[str, Any] = Field(default_factory=dict)
    error: Optional[str] = None

    class Config:
        json_schema_extra = {
            "example": {
                "case_id": "cone_realizability-0007",
                "suite": "cone_realizability",
                "timestamp": "2026-01-12T10:04:31",
                "passed": True,
                "duration_ms": 41.7,
                "subject": {
                    "kind": "arcs",
                    "arcs": [{"start": [1, 0], "end": [0, 1]}]
                },
                "details": {"realizable": True, "g_span": "dim0", "terms": 3},
                "error": None
            }
        }


class SuiteSummary(BaseModel):
    """Aggregate numbers for one suite"""
    suite: str
    total: int
    passed: int
    failed: int
    duration_ms: float

    @property
    def pass_rate(self) -> float:
        return self.passed / self.total if self.total else 0.0


class RunMetadata(BaseModel):
    """Metadata for an entire evaluation run"""
    run_id: str
    started_at: str
    completed_at: Optional[str] = None
    total_cases: int = 0
    cases_passed: int = 0
    cases_failed: int = 0
    config: Dict[str, Any] = Field(default_factory=dict)
