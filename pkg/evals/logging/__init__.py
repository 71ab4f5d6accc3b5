"""
Deep logging infrastructure for evaluation
"""

from .log_schema import (
    CaseLog,
    RunMetadata,
    SuiteSummary,
)
from .deep_logger import DeepLogger

__all__ = [
    "CaseLog",
    "RunMetadata",
    "SuiteSummary",
    "DeepLogger",
]
