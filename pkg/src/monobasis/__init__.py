"""Exact minimal monomial bases for multivariate Lagrange/Hermite interpolation."""

from .engine import BasisResult, Problem, Site, build_matrix, interpolate, is_interpolating_basis, minimal_basis
from .errors import DependentConditions, ZeroPivot
from .oracle import exhaustive_minimal_basis, greedy_minimal_basis
from .order import Cmp, MonomialOrder, compare, compare_sets, is_lower_set
from .parser import format_polynomial, parse_polynomial
from .poly import Polynomial, diff_apply, evaluate, functional_apply, support
from .reduce import is_reduced, is_reverse_reduced, reverse_reduce
from .shift import exp_series, shift_condition

__all__ = [
    "BasisResult", "Cmp", "DependentConditions", "MonomialOrder", "Polynomial", "Problem", "Site",
    "ZeroPivot", "build_matrix", "compare", "compare_sets", "diff_apply", "evaluate",
    "exhaustive_minimal_basis", "exp_series", "format_polynomial", "functional_apply",
    "greedy_minimal_basis", "interpolate", "is_interpolating_basis", "is_lower_set", "is_reduced",
    "is_reverse_reduced", "minimal_basis", "parse_polynomial", "reverse_reduce", "shift_condition",
    "support",
]
