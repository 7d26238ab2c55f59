"""Numeric certificates for the fractional wave equation driven by rough noise."""

try:
    from ._fracwave import *  # noqa: F401,F403  (installed layout)
except ImportError:
    from _fracwave import *  # noqa: F401,F403  (build-tree layout)

__version__ = "1.0.0"
