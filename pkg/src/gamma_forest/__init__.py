"""Exact enumeration and verification of descent statistics on labeled
rooted trees, normalized binary trees, and Stirling permutations.

Everything is integer-exact: polynomial coefficients are Python ints, so
results stay correct far past the range where floating point would drift.
"""

from .binary_trees import (
    bicolored_comb_census,
    bicolored_lyndon_census,
    comb_type,
    distribution_ndnl_nlyn,
    distribution_ndrd_rdes,
    enumerate_bicolored_combs,
    enumerate_bicolored_lyndon,
    enumerate_colored_combs,
    enumerate_normalized,
    free_count,
    is_ndnl,
    is_ndrd,
    joint_statistics,
    nlyn,
    rdes,
    valency,
)
from .errors import LimitExceededError
from .poly import (
    GammaVector,
    IntPolynomial,
    NotPalindromicError,
    drake_polynomial,
    eulerian_gamma_count,
    eulerian_polynomial,
    evaluate,
    from_gamma_basis,
    gamma_closed_form,
    is_palindromic,
    to_gamma_basis,
)
from .rooted_trees import (
    PruferCode,
    RootedTree,
    des,
    descent_polynomial,
    enumerate_rooted_trees,
    prufer_decode,
    prufer_encode,
)
from .stirling import (
    MalformedWordError,
    aapair,
    as_word,
    distribution_naas_aapair,
    distribution_ntns_tnpair,
    enumerate_stirling,
    is_naas,
    is_ntns,
    is_stirling,
    tnpair,
)
from .symfunc import (
    ESymExpansion,
    MultivariatePoly,
    Partition,
    comb_type_expansion,
    expand_e_lambda,
    expansion_in_variables,
    f_mcomb_direct,
    product_form_count,
    specialize_two_vars,
)

__version__ = "0.1.0"

__all__ = [
    "GammaVector",
    "IntPolynomial",
    "NotPalindromicError",
    "LimitExceededError",
    "MalformedWordError",
    "PruferCode",
    "RootedTree",
    "ESymExpansion",
    "MultivariatePoly",
    "Partition",
    "aapair",
    "as_word",
    "bicolored_comb_census",
    "bicolored_lyndon_census",
    "comb_type",
    "comb_type_expansion",
    "des",
    "descent_polynomial",
    "distribution_naas_aapair",
    "distribution_ndnl_nlyn",
    "distribution_ndrd_rdes",
    "distribution_ntns_tnpair",
    "drake_polynomial",
    "enumerate_bicolored_combs",
    "enumerate_bicolored_lyndon",
    "enumerate_colored_combs",
    "enumerate_normalized",
    "enumerate_rooted_trees",
    "enumerate_stirling",
    "eulerian_gamma_count",
    "eulerian_polynomial",
    "evaluate",
    "expand_e_lambda",
    "expansion_in_variables",
    "f_mcomb_direct",
    "free_count",
    "from_gamma_basis",
    "gamma_closed_form",
    "is_naas",
    "is_ndnl",
    "is_ndrd",
    "is_ntns",
    "is_palindromic",
    "is_stirling",
    "joint_statistics",
    "nlyn",
    "prufer_decode",
    "prufer_encode",
    "product_form_count",
    "rdes",
    "specialize_two_vars",
    "tnpair",
    "to_gamma_basis",
    "valency",
]
