"""Finite-group engine for aut-split, anti-solvable kernels and neutral liens."""

__version__ = "0.1.0"
