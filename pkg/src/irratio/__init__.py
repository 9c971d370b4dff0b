"""Witness hypersurfaces for stable irrationality, with exact certificates.

Submodules: :mod:`~irratio.squareclass`, :mod:`~irratio.symbol`,
:mod:`~irratio.quadform`, :mod:`~irratio.poly`, :mod:`~irratio.witness`,
:mod:`~irratio.bounds` and the command line in :mod:`~irratio.cli`.
"""

from .bounds import bounds_table, decompose_dimension, log_bound_check, min_degree
from .poly import GVariant, HomogPoly, PolyRing, build_g, multivariate_sqrt
from .squareclass import SquareClass, class_of_coordinate_ratio, multiply
from .symbol import Symbol, alpha_symbol, certify_alpha_nonzero, make_symbol, residue
from .witness import (
    Variant,
    WitnessParams,
    build_conic_witness,
    build_double_cover_witness,
    build_witness_hypersurface,
    verify_certificate,
)

__version__ = "0.1.0"
