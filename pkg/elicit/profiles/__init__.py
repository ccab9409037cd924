from .core import (
    Candidate,
    CandidateSet,
    Permutation,
    Profile,
    Ranking,
    all_permutations,
    check_ranking,
    mix,
    pairwise_matrix,
    permute_profile,
    permute_ranking,
    pos_vector,
    restrict_profile,
    restrict_ranking,
    transpose_profile,
    uniform_over,
    uniform_profile,
)
from .generators import make_rng, random_profile
from .io import dumps_profile, load_profile, loads_profile, profile_from_document, profile_to_document, save_profile

__all__ = [
    "Candidate",
    "CandidateSet",
    "Permutation",
    "Profile",
    "Ranking",
    "all_permutations",
    "check_ranking",
    "mix",
    "pairwise_matrix",
    "permute_profile",
    "permute_ranking",
    "pos_vector",
    "restrict_profile",
    "restrict_ranking",
    "transpose_profile",
    "uniform_over",
    "uniform_profile",
    "make_rng",
    "random_profile",
    "dumps_profile",
    "load_profile",
    "loads_profile",
    "profile_from_document",
    "profile_to_document",
    "save_profile",
]
