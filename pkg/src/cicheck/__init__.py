"""Exact complete-intersection checks for 0-dimensional polynomial ideals."""

from .fields import GF, QQ, FunctionField, PrimeField, RationalField
from .poly import PolyRing, Polynomial, TermOrdering

__all__ = [
    "GF",
    "QQ",
    "FunctionField",
    "PrimeField",
    "RationalField",
    "PolyRing",
    "Polynomial",
    "TermOrdering",
]

__version__ = "0.1.0"
