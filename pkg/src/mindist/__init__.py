"""Minimum distance of linear codes by enumeration, matroids and graded algebra."""

from .code import LinearCode, dual, is_mds, min_distance_brute, new_code, puncture, shorten, weight_distribution
from .errors import MindistError, ParseError
from .exact import Field, Matrix, make_field, rank, rref
from .graded import alpha_m_fitt, distance_via_afold, tutte_via_berget
from .inverse import inverse_bound
from .matroid import distance_from_tutte, tutte

__version__ = "0.1.0"

__all__ = [
    "Field",
    "LinearCode",
    "Matrix",
    "MindistError",
    "ParseError",
    "alpha_m_fitt",
    "distance_from_tutte",
    "distance_via_afold",
    "dual",
    "inverse_bound",
    "is_mds",
    "make_field",
    "min_distance_brute",
    "new_code",
    "puncture",
    "rank",
    "rref",
    "shorten",
    "tutte",
    "tutte_via_berget",
    "weight_distribution",
]
