from .schema import (
    ConeModel,
    HingeModel,
    SetModel,
    SynthesisTrace,
    VerdictModel,
    canonical_json,
)

__all__ = [
    'ConeModel',
    'HingeModel',
    'SetModel',
    'SynthesisTrace',
    'VerdictModel',
    'canonical_json',
]
