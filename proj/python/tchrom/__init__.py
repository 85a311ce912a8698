"""Chromatic (quasi)symmetric functions of small graphs.

Expansions are returned as dicts mapping an index tuple (a composition for
the M-basis, a partition for the m-basis) to the ascending coefficient list
of a polynomial in q.
"""

from ._tchrom import (
    CapExceeded,
    ConsistencyError,
    FormatError,
    Graph,
    PreconditionViolation,
    closed_T,
    count_T,
    cqsf_labeled,
    cqsf_oriented,
    csf,
    is_orientation_total_symmetric,
    normalized_total_star,
    set_vertex_cap,
    star_cqsf_coeff_closed,
    star_csf_coeff_closed,
    total_labeling,
    total_orientation,
    tst_coeff_closed,
    tst_coeff_first_step,
    verify,
    verify_binomial_identity,
    verify_csf_near_contraction,
    verify_orientation_near_contraction,
    verify_tree_formula,
)

__all__ = [
    "CapExceeded",
    "ConsistencyError",
    "FormatError",
    "Graph",
    "PreconditionViolation",
    "closed_T",
    "count_T",
    "cqsf_labeled",
    "cqsf_oriented",
    "csf",
    "is_orientation_total_symmetric",
    "normalized_total_star",
    "set_vertex_cap",
    "star_cqsf_coeff_closed",
    "star_csf_coeff_closed",
    "total_labeling",
    "total_orientation",
    "tst_coeff_closed",
    "tst_coeff_first_step",
    "verify",
    "verify_binomial_identity",
    "verify_csf_near_contraction",
    "verify_orientation_near_contraction",
    "verify_tree_formula",
]
