"""hingeset - Positivity sets of planar hinge functions"""

__version__ = "0.1.0"
