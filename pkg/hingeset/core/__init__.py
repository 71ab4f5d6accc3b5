from .cones import (
    Arc,
    PolytopalCone,
    RealizabilityVerdict,
    check_cone_condition,
    complement_of_boundary,
    compute_G_span,
    compute_R,
    contains_direction,
    normalize_cone,
)
from .errors import HingeSetError
from .exact import AffineForm, AffineMap, Direction, Point2, direction_ccw, nullspace, sample_inside_arc
from .hinge import (
    HingeFunction,
    PosHomCPWL,
    SymmetricDecomposition,
    central_gradient_sum,
    decompose_symmetric,
    peel_to_hinge,
    to_poshom,
)
from .planar import (
    ConvexCell,
    PolytopalSet,
    check_local_condition,
    classify_point,
    connected_components,
    positivity_set,
    set_equal,
)

__all__ = [
    'AffineForm',
    'AffineMap',
    'Arc',
    'ConvexCell',
    'Direction',
    'HingeFunction',
    'HingeSetError',
    'Point2',
    'PolytopalCone',
    'PolytopalSet',
    'PosHomCPWL',
    'RealizabilityVerdict',
    'SymmetricDecomposition',
    'central_gradient_sum',
    'check_cone_condition',
    'check_local_condition',
    'classify_point',
    'complement_of_boundary',
    'compute_G_span',
    'compute_R',
    'connected_components',
    'contains_direction',
    'decompose_symmetric',
    'direction_ccw',
    'normalize_cone',
    'nullspace',
    'peel_to_hinge',
    'positivity_set',
    'sample_inside_arc',
    'set_equal',
    'to_poshom',
]
