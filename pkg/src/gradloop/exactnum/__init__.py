"""Exact scalars, value groups and linear algebra."""
from ..snf import AffineSolution, integer_affine_solve
from .linalg import EchelonSpace, Solution, linear_solve, nullspace_sparse, rank
from .scalars import (MAX_CONDUCTOR, Cyclotomic, conductor, format_scalar, inv,
                      is_rational, parse_scalar, root_of_unity_exponent, zeta)
from .values import (ValueElement, ValueGroup, factor_into_value_group,
                     power_membership)

__all__ = [
    "AffineSolution", "Cyclotomic", "EchelonSpace", "MAX_CONDUCTOR", "Solution",
    "ValueElement", "ValueGroup", "conductor", "factor_into_value_group",
    "format_scalar", "integer_affine_solve", "inv", "is_rational", "linear_solve",
    "nullspace_sparse", "parse_scalar", "power_membership", "rank",
    "root_of_unity_exponent", "zeta",
]
