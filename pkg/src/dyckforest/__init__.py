"""Ranges, triplets, ternary-tree forest and prime censuses of OEIS A036991."""

from .core import (
    MAX_RANGE,
    U64_MAX,
    NotAMemberError,
    WidthOverflowError,
    central_binomial,
    dyck_mask,
    enumerate_terms,
    first_of_range,
    is_dyck,
    iter_range,
    mersenne,
    range_of,
    range_size,
    successor,
    trailing_ones,
)
from .forest import (
    TermRole,
    TreePath,
    ancestry,
    children_of,
    classify,
    roots_in_range,
    subtree_level,
    tree_level,
)
from .indexing import BallotTable, ballot_count, cumulative_size, rank, term_at
from .oeisdata import (
    BFileEntry,
    BFileFormatError,
    VerificationReport,
    parse_bfile,
    render_bfile,
    verify_prefix,
)
from .primes import (
    PrimeTripletRecord,
    count_dyck_among_primes,
    dyck_primes_up_to,
    gap_census,
    is_prime,
    is_prime_triplet,
    iter_dyck_primes,
    prime_triplets_in_range,
    prime_triplets_in_tree,
)
from .triplets import (
    NotInTripletError,
    Triplet,
    child,
    lone_terms_in_range,
    parent_unary,
    predicted_lone_count,
    spawn_triplet,
    triplet_of,
    triplet_parent,
    triplets_in_range,
)

__version__ = "0.1.0"

__all__ = [
    "BFileEntry",
    "BFileFormatError",
    "BallotTable",
    "MAX_RANGE",
    "NotAMemberError",
    "NotInTripletError",
    "PrimeTripletRecord",
    "TermRole",
    "TreePath",
    "Triplet",
    "U64_MAX",
    "VerificationReport",
    "WidthOverflowError",
    "ancestry",
    "ballot_count",
    "central_binomial",
    "child",
    "children_of",
    "classify",
    "count_dyck_among_primes",
    "cumulative_size",
    "dyck_mask",
    "dyck_primes_up_to",
    "enumerate_terms",
    "first_of_range",
    "gap_census",
    "is_dyck",
    "is_prime",
    "is_prime_triplet",
    "iter_dyck_primes",
    "iter_range",
    "lone_terms_in_range",
    "mersenne",
    "parent_unary",
    "parse_bfile",
    "predicted_lone_count",
    "prime_triplets_in_range",
    "prime_triplets_in_tree",
    "range_of",
    "range_size",
    "rank",
    "render_bfile",
    "roots_in_range",
    "spawn_triplet",
    "subtree_level",
    "successor",
    "term_at",
    "trailing_ones",
    "tree_level",
    "triplet_of",
    "triplet_parent",
    "triplets_in_range",
    "verify_prefix",
]
