"""Exact graded and local Hessian algebras of hypersurfaces."""

from .errors import HessError
from .gradedla import GradedIdeal, HilbertSeq, quotient_hilbert
from .hessalg import (
    count_weighted_homogeneous,
    hessian_algebra_series,
    milnor_series,
    reconcile_global_local,
    smooth_reference_series,
    thresholds,
    verify_prop_A,
)
from .localalg import ADE_CATALOG, chi_invariants, milnor_number, normal_form, tjurina_number
from .polycore import Polynomial, dehomogenize, hessian_matrix, jacobian_generators, k_minors
from .polytext import PolyText, parse_family, parse_polynomial, render_polynomial
from .strata import evaluate_family, hasse_covers, hasse_dot, partition_by_series, random_rational_points

__version__ = "0.1.0"

__all__ = [
    "ADE_CATALOG",
    "GradedIdeal",
    "HessError",
    "HilbertSeq",
    "PolyText",
    "Polynomial",
    "chi_invariants",
    "count_weighted_homogeneous",
    "dehomogenize",
    "evaluate_family",
    "hasse_covers",
    "hasse_dot",
    "hessian_algebra_series",
    "hessian_matrix",
    "jacobian_generators",
    "k_minors",
    "milnor_number",
    "milnor_series",
    "normal_form",
    "parse_family",
    "parse_polynomial",
    "partition_by_series",
    "quotient_hilbert",
    "random_rational_points",
    "reconcile_global_local",
    "render_polynomial",
    "smooth_reference_series",
    "thresholds",
    "tjurina_number",
    "verify_prop_A",
]
