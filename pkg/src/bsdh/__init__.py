"""Exact-arithmetic cohomology of line and relative tangent bundles on
Bott-Samelson towers, with a rigidity classifier for longest-element
words built from Coxeter elements in types F4 and G2."""

__version__ = "0.1.0"
