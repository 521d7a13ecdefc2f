"""Holomorphic invariants of special domains in C^n.

Carathéodory pseudodistances on the unit ball and polydisk, distances to
compact deleted sets, closed-form squeezing functions / Fridman invariants,
sub-mean-value testing, and the non-plurisubharmonic counterexample
constructions.
"""

__version__ = "0.1.0"

from .core import Ball, ModelDomain, Polydisk, as_cvector, contains, hermitian_inner, minkowski
from .caratheodory import DistanceValue, distance_value, tanh_c, tanh_c_ball, tanh_c_polydisk

__all__ = [
    "Ball",
    "DistanceValue",
    "ModelDomain",
    "Polydisk",
    "as_cvector",
    "contains",
    "distance_value",
    "hermitian_inner",
    "minkowski",
    "tanh_c",
    "tanh_c_ball",
    "tanh_c_polydisk",
]
