"""
Command dispatch for the hingeset CLI.

Each verb parses its payload against a schema, calls one library
operation and returns a ``CommandResult``. Exit codes: 0 on success, 2
when the computation produced a negative answer (not realizable, local
condition failed, sets differ), 1 on input or operation errors.
"""

import json
from dataclasses import dataclass
from typing import Any, Callable, Dict, Optional, Union

from pydantic import ValidationError

from hingeset.core.cones import check_cone_condition
from hingeset.core.errors import HingeSetError, InternalInconsistency, NotRealizable, SchemaError
from hingeset.core.hinge import HingeFunction
from hingeset.core.planar import (
    PolytopalSet,
    check_local_condition,
    cone_to_set,
    connected_components,
    positivity_set,
    set_equal,
)
from hingeset.logging_config import get_logger
from hingeset.models.schema import (
    ComparisonModel,
    ComponentsModel,
    ConeModel,
    EvalModel,
    HingeModel,
    LocalConditionModel,
    PolygonModel,
    PositivityModel,
    SetModel,
    SynthesisTrace,
    TriangleModel,
    VerdictModel,
    VerifyModel,
    canonical_json,
    to_jsonable,
)
from hingeset.render.svg import RenderSpec, parse_viewbox, render
from hingeset.synthesis.cone_synthesis import synthesize_cone_report
from hingeset.synthesis.polygons import (
    synthesize_boundary_complement,
    synthesize_convex_polygon,
    synthesize_triangle,
)

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NEGATIVE = 2


@dataclass
class CommandOptions:
    viewbox: Optional[str] = None
    trace: bool = False
    arrangement: bool = False


@dataclass
class CommandResult:
    exit_code: int
    body: Any
    svg: bool = False

    def text(self) -> str:
        if self.svg:
            return self.body if self.body.endswith("\n") else self.body + "\n"
        return canonical_json(self.body)


def load_payload(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError(f"malformed JSON: {e.msg}", line=e.lineno, column=e.colno) from e


def _ok(body: Any) -> CommandResult:
    return CommandResult(EXIT_OK, to_jsonable(body))


def _hinge_or_set(payload: Any) -> Union[HingeFunction, PolytopalSet]:
    if isinstance(payload, dict) and "cells" in payload:
        return SetModel.model_validate(payload).to_core()
    return HingeModel.model_validate(payload).to_core()


def _as_set(target: Union[HingeFunction, PolytopalSet]) -> PolytopalSet:
    return positivity_set(target).set if isinstance(target, HingeFunction) else target


# =============================================================================
# Verbs
# =============================================================================

def check_cone(payload: Any, options: CommandOptions) -> CommandResult:
    verdict = check_cone_condition(ConeModel.model_validate(payload).to_core())
    model = VerdictModel.from_core(verdict)
    return CommandResult(EXIT_OK if verdict.realizable else EXIT_NEGATIVE, to_jsonable(model))


def synth_cone(payload: Any, options: CommandOptions) -> CommandResult:
    report = synthesize_cone_report(ConeModel.model_validate(payload).to_core())
    body: Dict[str, Any] = {"hinge": HingeModel.from_core(report.hinge)}
    if options.trace and report.frame is not None:
        body["trace"] = SynthesisTrace.from_core(report.frame, report.profile)
    return _ok(body)


def check_set(payload: Any, options: CommandOptions) -> CommandResult:
    report = check_local_condition(SetModel.model_validate(payload).to_core())
    return CommandResult(EXIT_OK if report.passed else EXIT_NEGATIVE, to_jsonable(LocalConditionModel.from_core(report)))


def positivity(payload: Any, options: CommandOptions) -> CommandResult:
    result = positivity_set(HingeModel.model_validate(payload).to_core())
    return _ok(PositivityModel.from_core(result))


def components(payload: Any, options: CommandOptions) -> CommandResult:
    report = connected_components(_as_set(_hinge_or_set(payload)))
    return _ok(ComponentsModel.from_core(report))


def synth_triangle(payload: Any, options: CommandOptions) -> CommandResult:
    model = TriangleModel.model_validate(payload)
    return _ok({"hinge": HingeModel.from_core(synthesize_triangle(*model.vertices))})


def synth_polygon(payload: Any, options: CommandOptions) -> CommandResult:
    cell = PolygonModel.model_validate(payload).to_core()
    return _ok({"hinge": HingeModel.from_core(synthesize_convex_polygon(cell))})


def boundary_complement(payload: Any, options: CommandOptions) -> CommandResult:
    cell = PolygonModel.model_validate(payload).to_core()
    h, eps = synthesize_boundary_complement(cell)
    return _ok({"hinge": HingeModel.from_core(h), "epsilon": eps})


def evaluate(payload: Any, options: CommandOptions) -> CommandResult:
    model = EvalModel.model_validate(payload)
    return _ok({"value": model.hinge.to_core().evaluate(model.point)})


def verify(payload: Any, options: CommandOptions) -> CommandResult:
    model = VerifyModel.model_validate(payload)
    if (model.cone is None) == (model.set is None):
        raise SchemaError("verify needs exactly one of cone or set")
    target = cone_to_set(model.cone.to_core()) if model.cone is not None else model.set.to_core()
    comparison = set_equal(positivity_set(model.hinge.to_core()).set, target)
    return CommandResult(EXIT_OK if comparison.equal else EXIT_NEGATIVE, to_jsonable(ComparisonModel.from_core(comparison)))


def render_svg(payload: Any, options: CommandOptions) -> CommandResult:
    spec = RenderSpec.from_config(parse_viewbox(options.viewbox) if options.viewbox else None)
    target = _hinge_or_set(payload)
    if options.arrangement and isinstance(target, HingeFunction):
        target = positivity_set(target)
    return CommandResult(EXIT_OK, render(target, spec), svg=True)


VERBS: Dict[str, Callable[[Any, CommandOptions], CommandResult]] = {
    "check-cone": check_cone,
    "synth-cone": synth_cone,
    "check-set": check_set,
    "positivity-set": positivity,
    "components": components,
    "synth-triangle": synth_triangle,
    "synth-polygon": synth_polygon,
    "boundary-complement": boundary_complement,
    "eval": evaluate,
    "verify": verify,
    "render": render_svg,
}


def _error(error: HingeSetError) -> CommandResult:
    return CommandResult(EXIT_ERROR, {"error": to_jsonable(error.to_dict())})


def run_command(verb: str, payload: Any, options: Optional[CommandOptions] = None) -> CommandResult:
    """Run one verb on a parsed JSON payload, mapping errors to exit codes."""
    options = options or CommandOptions()
    handler = VERBS.get(verb)
    if handler is None:
        return _error(SchemaError(f"unknown verb: {verb}", verbs=sorted(VERBS)))

    try:
        result = handler(payload, options)
    except NotRealizable as e:
        logger.info("%s: not realizable", verb)
        body = {
            "realizable": False,
            "verdict": VerdictModel.from_core(e.verdict),
            "error": e.to_dict(),
        }
        return CommandResult(EXIT_NEGATIVE, to_jsonable(body))
    except ValidationError as e:
        logger.warning("%s: payload failed schema validation", verb)
        errors = [{"loc": [str(p) for p in err["loc"]], "msg": err["msg"]} for err in e.errors()]
        return _error(SchemaError(f"payload does not match the {verb} schema", errors=errors))
    except HingeSetError as e:
        logger.warning("%s failed: %s", verb, e.message)
        return _error(e)
    except Exception as e:
        logger.exception("%s raised %s", verb, type(e).__name__)
        return _error(InternalInconsistency(f"{verb} raised {type(e).__name__}: {e}", exception=type(e).__name__))

    logger.info("%s finished with exit code %d", verb, result.exit_code)
    return result


def run_text(verb: str, text: str, options: Optional[CommandOptions] = None) -> CommandResult:
    try:
        payload = load_payload(text)
    except SchemaError as e:
        return _error(e)
    return run_command(verb, payload, options)
