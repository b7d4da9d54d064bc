"""QC-LDPC exponent matrices with girth 6 or 8 and no small elementary
trapping sets: construction, condition checking, search, and an
independent graph oracle."""

from .conditions import (
    ConditionReport,
    ConditionViolation,
    check_girth6_etsfree,
    check_girth8_etsfree,
    check_six_cycle_conditions,
    five_one_ets_impossible,
    lower_bound_lifting,
)
from .cycles import (
    CycleWitness,
    eight_cycle_three_rows_exists,
    eight_cycle_two_rows_exists,
    evaluate_cycle_sum,
    four_cycle_exists,
    girth_from_exponent,
    six_cycle_exists,
)
from .ets import (
    EnumerationLimitError,
    EtsRecord,
    classify_harmful,
    enumerate_ets,
    ets_class_counts,
    exhaustive_subset_oracle,
)
from .matrices import (
    CodeProfile,
    DifferenceMatrix,
    ExponentMatrix,
    MatrixFormatError,
    PairDifferenceMatrix,
    build_difference_matrix,
    build_pair_difference_matrix,
    pair_difference_matrix,
    read_exponent_matrix,
    read_table_fragment,
    write_exponent_matrix,
)
from .search import (
    OracleDisagreement,
    SearchLimitError,
    SearchSpec,
    find_min_lifting,
    search,
    verify_matrix_with_oracle,
)
from .tanner import TannerGraph, bfs_girth, has_four_cycle, has_six_cycle, lift, to_alist

__version__ = "0.1.0"

__all__ = [
    "CodeProfile",
    "ConditionReport",
    "ConditionViolation",
    "CycleWitness",
    "DifferenceMatrix",
    "EnumerationLimitError",
    "EtsRecord",
    "ExponentMatrix",
    "MatrixFormatError",
    "OracleDisagreement",
    "PairDifferenceMatrix",
    "SearchLimitError",
    "SearchSpec",
    "TannerGraph",
    "bfs_girth",
    "build_difference_matrix",
    "build_pair_difference_matrix",
    "check_girth6_etsfree",
    "check_girth8_etsfree",
    "check_six_cycle_conditions",
    "classify_harmful",
    "eight_cycle_three_rows_exists",
    "eight_cycle_two_rows_exists",
    "enumerate_ets",
    "ets_class_counts",
    "evaluate_cycle_sum",
    "exhaustive_subset_oracle",
    "find_min_lifting",
    "five_one_ets_impossible",
    "four_cycle_exists",
    "girth_from_exponent",
    "has_four_cycle",
    "has_six_cycle",
    "lift",
    "lower_bound_lifting",
    "pair_difference_matrix",
    "read_exponent_matrix",
    "read_table_fragment",
    "search",
    "six_cycle_exists",
    "to_alist",
    "verify_matrix_with_oracle",
    "write_exponent_matrix",
]
