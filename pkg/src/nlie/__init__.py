"""Exact computations for the simple n-Lie algebra and its basic Lie algebra so(n+1)."""

__version__ = "0.1.0"
