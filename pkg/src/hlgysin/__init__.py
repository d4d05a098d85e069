"""Exact Hall-Littlewood classes and Gysin push-forwards in Chern roots.

The package computes, over the integers and exactly, the symmetric classes
R and P attached to integer sequences, their Schur (t=0) and Schur P (t=-1)
shadows, and the flag/Grassmannian push-forward operators acting on them —
and ships executable verifiers for the push-forward identities relating
all of these.
"""

from .polyring import (
    ArityMismatchError,
    NotDivisibleError,
    Polynomial,
    difference_product,
    divide_by_vandermonde,
    vandermonde,
)
from .symgroup import (
    DEFAULT_PERMUTATION_BOUND,
    BlockStructure,
    BoundExceededError,
    Permutation,
    all_permutations,
    block_structure,
    coset_reps,
    ensure_within_bound,
    stabilizer_elements,
    stabilizer_order,
)
from .antisym import (
    alternating_vandermonde_quotient,
    jacobi_symmetrizer,
    signed_permutation_sum,
    sort_desc_with_sign,
)
from .hallittlewood import (
    complete_homogeneous,
    gaussian_binomial,
    gaussian_binomial_at_minus_one,
    hall_littlewood_p,
    hall_littlewood_p_specialized,
    hall_littlewood_r,
    hall_littlewood_r_coset,
    is_partition,
    is_strict_partition,
    schur_p_coset,
    schur_p_recursive,
    schur_s,
    schur_s_bialternant,
    straighten_schur_p,
    straighten_schur_s,
    t_factorial,
    t_factorial_product,
    t_twisted_vandermonde,
)
from .gysin import (
    NonInvariantInputError,
    RootSplit,
    blockwise_full_flag,
    full_flag_pushforward,
    grassmann_pushforward,
    leading_flag_pushforward,
    partial_flag_pushforward,
)
from .identities import (
    IDENTITY_SUITES,
    InstanceFamily,
    VerificationReport,
    d_coefficient,
    run_suite,
    verify_cor_gaussian,
    verify_lemma_sum,
    verify_prop_juxtaposition,
    verify_t0_jlp,
    verify_t_minus1,
    verify_theorem_main,
)

__version__ = "0.1.0"

__all__ = [
    "ArityMismatchError",
    "NotDivisibleError",
    "Polynomial",
    "difference_product",
    "divide_by_vandermonde",
    "vandermonde",
    "DEFAULT_PERMUTATION_BOUND",
    "BlockStructure",
    "BoundExceededError",
    "Permutation",
    "all_permutations",
    "block_structure",
    "coset_reps",
    "ensure_within_bound",
    "stabilizer_elements",
    "stabilizer_order",
    "alternating_vandermonde_quotient",
    "jacobi_symmetrizer",
    "signed_permutation_sum",
    "sort_desc_with_sign",
    "complete_homogeneous",
    "gaussian_binomial",
    "gaussian_binomial_at_minus_one",
    "hall_littlewood_p",
    "hall_littlewood_p_specialized",
    "hall_littlewood_r",
    "hall_littlewood_r_coset",
    "is_partition",
    "is_strict_partition",
    "schur_p_coset",
    "schur_p_recursive",
    "schur_s",
    "schur_s_bialternant",
    "straighten_schur_p",
    "straighten_schur_s",
    "t_factorial",
    "t_factorial_product",
    "t_twisted_vandermonde",
    "NonInvariantInputError",
    "RootSplit",
    "blockwise_full_flag",
    "full_flag_pushforward",
    "grassmann_pushforward",
    "leading_flag_pushforward",
    "partial_flag_pushforward",
    "IDENTITY_SUITES",
    "InstanceFamily",
    "VerificationReport",
    "d_coefficient",
    "run_suite",
    "verify_cor_gaussian",
    "verify_lemma_sum",
    "verify_prop_juxtaposition",
    "verify_t0_jlp",
    "verify_t_minus1",
    "verify_theorem_main",
    "__version__",
]
