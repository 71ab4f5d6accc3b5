from .coefficients import solve_hinge_coefficients
from .cone_synthesis import build_symmetric_profile, choose_frame, classify_segments, synthesize_cone
from .polygons import synthesize_boundary_complement, synthesize_convex_polygon, synthesize_triangle

__all__ = [
    'build_symmetric_profile',
    'choose_frame',
    'classify_segments',
    'solve_hinge_coefficients',
    'synthesize_boundary_complement',
    'synthesize_cone',
    'synthesize_convex_polygon',
    'synthesize_triangle',
]
