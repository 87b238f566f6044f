"""Exact computations on Vandermonde varieties, Schur-polynomial ideals and linear recurrences."""

from .groebner import Caps, GroebnerBasis, GroebnerCapExceeded, HilbertSeries, groebner_basis
from .ideals import GeneratorSet, IndexTuple, PartitionSpec
from .polyring import Polynomial, UniPoly, format_poly, parse_poly

__version__ = "0.1.0"

__all__ = [
    "Caps", "GeneratorSet", "GroebnerBasis", "GroebnerCapExceeded", "HilbertSeries", "IndexTuple",
    "PartitionSpec", "Polynomial", "UniPoly", "format_poly", "groebner_basis", "parse_poly",
]
