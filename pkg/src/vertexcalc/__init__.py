"""Exact computer algebra for topological vertex amplitudes and instanton sums."""

__version__ = "0.1.0"
