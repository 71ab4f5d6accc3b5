from .svg import RenderSpec, render, render_arrangement, render_hinge, render_set

__all__ = ['RenderSpec', 'render', 'render_arrangement', 'render_hinge', 'render_set']
