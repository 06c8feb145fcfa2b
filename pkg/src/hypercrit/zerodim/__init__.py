"""Zero-dimensional system solving and point-set parametrizations."""

from .groebner import (
    GroebnerBasis,
    MonomialSpace,
    buchberger,
    groebner_of_multipolys,
    pack_multipoly,
    require_staircase,
    unpack_to_multipoly,
)
from .params import (
    PointSet,
    ZeroDimParam,
    expand_points,
    param_from_functions,
    param_union,
    params_equal,
    point_in_param,
    pushforward,
    reparametrize,
    validate_param,
    value_functions,
)
from .solver import QuotientAlgebra, krylov_minpoly, solve_zero_dim, trace_form_rank

__all__ = [
    "GroebnerBasis",
    "MonomialSpace",
    "buchberger",
    "groebner_of_multipolys",
    "pack_multipoly",
    "require_staircase",
    "unpack_to_multipoly",
    "PointSet",
    "ZeroDimParam",
    "expand_points",
    "param_from_functions",
    "param_union",
    "params_equal",
    "point_in_param",
    "pushforward",
    "reparametrize",
    "validate_param",
    "value_functions",
    "QuotientAlgebra",
    "krylov_minpoly",
    "solve_zero_dim",
    "trace_form_rank",
]
