"""Exact real-root counting for sparse polynomials via chamber cones of discriminant amoebas."""

from .polyparse import SparsePoly, parse, render
from .rootcount import UNDETERMINED, RootCountReport, count_positive_tetranomial, count_real

__all__ = [
    "SparsePoly",
    "parse",
    "render",
    "UNDETERMINED",
    "RootCountReport",
    "count_positive_tetranomial",
    "count_real",
]
