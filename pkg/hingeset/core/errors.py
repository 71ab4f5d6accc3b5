"""
Error types for hingeset.

Every error carries a machine-readable ``code`` and a JSON-friendly
``details`` dict so the command layer can surface it without knowing
the concrete class.
"""

from typing import Any, Dict


class HingeSetError(Exception):
    """Base class for all hingeset errors."""

    code: str = "hingeset_error"

    def __init__(self, message: str, **details: Any):
        super().__init__(message)
        self.message = message
        self.details: Dict[str, Any] = details

    def to_dict(self) -> Dict[str, Any]:
        return {"code": self.code, "message": self.message, "details": self.details}


class DegenerateArc(HingeSetError):
    code = "degenerate_arc"


class OnBreakLocus(HingeSetError):
    """A point lies on the zero line of a hinge term."""

    code = "on_break_locus"

    def __init__(self, term_index: int, message: str = ""):
        super().__init__(message or f"point lies on the zero line of term {term_index}", term_index=term_index)
        self.term_index = term_index


class LengthMismatch(HingeSetError):
    code = "length_mismatch"


class NotHomogeneous(HingeSetError):
    code = "not_homogeneous"


class NotDecomposable(HingeSetError):
    """Jumps across a break and its antipode differ."""

    code = "not_decomposable"

    def __init__(self, direction, message: str = ""):
        super().__init__(
            message or f"jump at {direction} differs from the jump at its antipode",
            direction=[direction.dx, direction.dy],
        )
        self.direction = direction


class InternalInconsistency(HingeSetError):
    code = "internal_inconsistency"


class NotRealizable(HingeSetError):
    code = "not_realizable"

    def __init__(self, verdict, message: str = ""):
        super().__init__(message or "cone is not the positivity set of any hinge function")
        self.verdict = verdict


class DegenerateTriangle(HingeSetError):
    code = "degenerate_triangle"


class DegenerateInput(HingeSetError):
    code = "degenerate_input"


class ConstructionFailed(HingeSetError):
    code = "construction_failed"


class EpsilonSearchExhausted(HingeSetError):
    code = "epsilon_search_exhausted"


class EmptyCell(HingeSetError):
    code = "empty_cell"


class SchemaError(HingeSetError):
    code = "schema_error"
