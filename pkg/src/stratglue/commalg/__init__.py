"""Exact commutative algebra over Q: polynomials, Groebner bases, elimination."""
from .poly import Poly, PolyParseError, PolyRing, parse_poly
from .ideal import (
    AlgMap,
    Ideal,
    RingMismatch,
    contract,
    eliminate,
    extend,
    groebner,
    ideal_equal,
    ideal_membership,
    ideal_subset,
    intersect,
    point_in_variety,
    radical_contains,
    same_variety,
    saturate,
    variety_subset,
)

__all__ = [
    "AlgMap", "Ideal", "Poly", "PolyParseError", "PolyRing", "RingMismatch",
    "contract", "eliminate", "extend", "groebner", "ideal_equal", "ideal_membership",
    "ideal_subset", "intersect", "parse_poly", "point_in_variety", "radical_contains",
    "same_variety", "saturate", "variety_subset",
]
