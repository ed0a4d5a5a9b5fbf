"""Exact computations with exterior splashes of order-q-subplanes of PG(2, q^3)."""
from .errors import GeometryError
from .fields import FieldCtx, frobenius, make_field, norm, solve_norm_eq, trace
from .plane import (
    Homography,
    Subline,
    Subplane,
    base_subplane,
    join,
    meet,
    subplane_from_homography,
    subplane_from_quadrangle,
)
from .splash import Splash, canonical_pair, carriers, singer_group, splash

__all__ = [
    "FieldCtx", "GeometryError", "Homography", "Splash", "Subline", "Subplane",
    "base_subplane", "canonical_pair", "carriers", "frobenius", "join", "make_field",
    "meet", "norm", "singer_group", "solve_norm_eq", "splash", "subplane_from_homography",
    "subplane_from_quadrangle", "trace",
]

__version__ = "0.1.0"
