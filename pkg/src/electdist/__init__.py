"""Isomorphism and isomorphic distances between ordinal elections.

Models elections as (candidates, votes) with votes as strict total orders,
and provides: per-vote metrics (discrete, swap, Spearman footrule), their
lifts to distances between whole elections via optimal candidate and voter
matchings, exact and budget-parameterized and approximate solvers,
structured domains (single-peaked, single-crossing), pairwise distance
matrices, and a 2D stress-minimizing map of elections.
"""

__version__ = "0.1.0"

from .approx import approx_auto, approx_candidates, approx_candidates_minus
from .assignment import min_cost_perfect_matching
from .domains import (
    Axis,
    Domain,
    domain_as_election,
    is_single_crossing_order,
    is_single_peaked,
    kemeny_reduction_instance,
    maximal_single_peaked_domain,
    sample_election,
)
from .embedding import Embedding, StressEmbedding, embed_2d
from .errors import (
    BudgetTooLargeForSearch,
    CapExceeded,
    DomainTooLarge,
    ElectdistError,
    EmptyDomain,
    HeterogeneousSizes,
    IncompleteOrder,
    NotAPermutation,
    ParseError,
    SizeMismatch,
    UnsupportedFormat,
    ValidationError,
    VoteLengthMismatch,
)
from .exact import (
    best_pair_induced,
    distance_with_candidate_matching,
    exact_distance_brute_candidates,
    exact_spearman_brute_voters,
    kemeny_score_brute,
    spearman_with_voter_matching,
)
from .fpt import (
    SwapWitness,
    decide_spearman,
    decide_swap,
    distance_within_budget,
    search_swap_witness,
)
from .io_formats import (
    load_election,
    read_native,
    read_preflib_soc,
    save_election,
    write_native,
)
from .isomorphism import (
    are_isomorphic,
    canonical_form,
    exact_discrete_distance,
    find_isomorphism,
)
from .metrics import (
    MetricKind,
    d_disc,
    d_spear,
    d_swap,
    induced_distance,
    vote_distance,
)
from .model import (
    CandidateMatching,
    DistanceResult,
    Election,
    PreferenceOrder,
    VoterMatching,
    apply_candidate_matching,
    validate_election,
)
from .pairwise import DistanceMatrix, pairwise_matrix

__all__ = [
    "__version__",
    "Axis",
    "BudgetTooLargeForSearch",
    "CandidateMatching",
    "CapExceeded",
    "DistanceMatrix",
    "DistanceResult",
    "Domain",
    "DomainTooLarge",
    "ElectdistError",
    "Election",
    "Embedding",
    "EmptyDomain",
    "HeterogeneousSizes",
    "IncompleteOrder",
    "MetricKind",
    "NotAPermutation",
    "ParseError",
    "PreferenceOrder",
    "SizeMismatch",
    "StressEmbedding",
    "SwapWitness",
    "UnsupportedFormat",
    "ValidationError",
    "VoteLengthMismatch",
    "VoterMatching",
    "apply_candidate_matching",
    "approx_auto",
    "approx_candidates",
    "approx_candidates_minus",
    "are_isomorphic",
    "best_pair_induced",
    "canonical_form",
    "d_disc",
    "d_spear",
    "d_swap",
    "decide_spearman",
    "decide_swap",
    "distance_with_candidate_matching",
    "distance_within_budget",
    "domain_as_election",
    "embed_2d",
    "exact_discrete_distance",
    "exact_distance_brute_candidates",
    "exact_spearman_brute_voters",
    "find_isomorphism",
    "induced_distance",
    "is_single_crossing_order",
    "is_single_peaked",
    "kemeny_reduction_instance",
    "kemeny_score_brute",
    "load_election",
    "maximal_single_peaked_domain",
    "min_cost_perfect_matching",
    "pairwise_matrix",
    "read_native",
    "read_preflib_soc",
    "sample_election",
    "save_election",
    "search_swap_witness",
    "spearman_with_voter_matching",
    "validate_election",
    "vote_distance",
    "write_native",
]
