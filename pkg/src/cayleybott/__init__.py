"""Bott-Borel-Weil cohomology and exceptional collections on rational homogeneous spaces."""

__version__ = "0.1.0"
