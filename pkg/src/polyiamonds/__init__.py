"""Polyiamonds on the triangular lattice: holes, perimeters, extremal bounds
and the spiral construction, with an exhaustive enumerator for cross-checks."""

__version__ = "0.1.0"
