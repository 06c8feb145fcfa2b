"""Exact field and polynomial arithmetic."""

from .fields import (
    QQ,
    ExtensionField,
    FieldContext,
    PrimeField,
    RationalField,
    extension_of,
    field_sqrt,
    is_irreducible,
    is_prime,
    quadratic_nonresidue,
    random_irreducible,
    sqrt_with_extension,
)
from .multipoly import MultiPoly, determinant, grevlex_key
from .quotient import (
    QuotientContext,
    SplitRequest,
    d5_run,
    quotient_gcd_d5,
    quotient_poly,
    requotient,
)
from .unipoly import (
    NEG_INF,
    UniPoly,
    crt_pair,
    inverse_mod,
    is_squarefree,
    multiplicity_decomposition,
    squarefree_part,
    uni_gcd,
    uni_xgcd,
)

__all__ = [
    "QQ",
    "ExtensionField",
    "FieldContext",
    "PrimeField",
    "RationalField",
    "extension_of",
    "field_sqrt",
    "is_irreducible",
    "is_prime",
    "quadratic_nonresidue",
    "random_irreducible",
    "sqrt_with_extension",
    "MultiPoly",
    "determinant",
    "grevlex_key",
    "QuotientContext",
    "SplitRequest",
    "d5_run",
    "quotient_gcd_d5",
    "quotient_poly",
    "requotient",
    "NEG_INF",
    "UniPoly",
    "crt_pair",
    "inverse_mod",
    "is_squarefree",
    "multiplicity_decomposition",
    "squarefree_part",
    "uni_gcd",
    "uni_xgcd",
]
