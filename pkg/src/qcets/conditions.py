"""Sufficient-condition checkers on the pair-difference matrix.

``check_girth6_etsfree`` passes exactly when every row of DD has pairwise
distinct components, none zero and none doubling to zero; a passing matrix
lifts to a girth >= 6 graph free of (4,0) and (4,2) elementary trapping
sets, and fully connected column-weight-3 codes never contain a (5,1).

``check_girth8_etsfree`` additionally requires joint distinctness across
the first two DD rows (the matrix must be normalized: all-zero first row
and column); a passing matrix lifts to a girth >= 8 graph free of all
(a,b) elementary trapping sets with a <= 8 and b <= 3.

The conditions are sufficient, not necessary: a failing report never
implies the lifted graph actually contains the offending structure.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from itertools import combinations

from .matrices import (
    ExponentMatrix,
    PairDifferenceMatrix,
    pair_difference_matrix,
)

# violation tags, in the fixed evaluation order used by the checkers
ZERO_IN_DD = "zero-in-DD"
DOUBLING_ZERO = "doubling-zero"
REPEAT_IN_ROW = "repeat-in-row"
REPEAT_ACROSS_ROWS_01 = "repeat-across-rows-01"
SIX_CYCLE_INEQUALITY = "six-cycle-inequality-index"
BELOW_LOWER_BOUND = "below-lower-bound"


@dataclass(frozen=True)
class ConditionViolation:
    """Location of the first violated condition."""

    tag: str
    row: int | None = None
    pair_columns: tuple[tuple[int, int], ...] = ()
    components: tuple[int, ...] = ()
    inequality_index: int | None = None


@dataclass(frozen=True)
class ConditionReport:
    passed: bool
    violation: ConditionViolation | None = None

    def __post_init__(self) -> None:
        if self.passed == (self.violation is not None):
            raise ValueError("passed reports carry no violation and vice versa")

    @property
    def violated_condition(self) -> str | None:
        return None if self.violation is None else self.violation.tag

    @property
    def witness(self) -> ConditionViolation | None:
        return self.violation


def _fail(tag, **kw) -> ConditionReport:
    return ConditionReport(False, ConditionViolation(tag, **kw))


def _first_zero(dd: PairDifferenceMatrix, rows) -> ConditionReport | None:
    for i in rows:
        for value, t, _side in dd.row_components(i):
            if value == 0:
                return _fail(
                    ZERO_IN_DD,
                    row=i,
                    pair_columns=(dd.column_index_pairs[t],),
                    components=(value,),
                )
    return None


def _first_doubling(dd: PairDifferenceMatrix, rows) -> ConditionReport | None:
    degree = dd.lifting_degree
    for i in rows:
        for value, t, _side in dd.row_components(i):
            if value != 0 and (2 * value) % degree == 0:
                return _fail(
                    DOUBLING_ZERO,
                    row=i,
                    pair_columns=(dd.column_index_pairs[t],),
                    components=(value,),
                )
    return None


def _first_repeat(dd: PairDifferenceMatrix, rows, tag: str) -> ConditionReport | None:
    """First repeated component over the given rows taken together."""
    seen: dict[int, tuple[int, int]] = {}
    for i in rows:
        for value, t, _side in dd.row_components(i):
            prev = seen.get(value)
            if prev is not None and prev != (i, t):
                return _fail(
                    tag,
                    row=prev[0],
                    pair_columns=(
                        dd.column_index_pairs[prev[1]],
                        dd.column_index_pairs[t],
                    ),
                    components=(value,),
                )
            seen.setdefault(value, (i, t))
    return None


def check_girth6_etsfree(matrix: ExponentMatrix) -> ConditionReport:
    """Per-row conditions on DD for a girth-6 code free of small trapping sets.

    Passes iff every row of DD has 2*C(n,2) pairwise distinct components,
    none of them zero and none doubling to zero mod N.  Accepts
    non-normalized matrices with a warning, since only row-pair differences
    enter the conditions.
    """
    if not matrix.normalized:
        warnings.warn(
            "girth-6 conditions evaluated on a non-normalized matrix "
            "(first row/column not all-zero)",
            stacklevel=2,
        )
    dd = pair_difference_matrix(matrix)
    for probe in (
        _first_zero(dd, (0, 1, 2)),
        _first_doubling(dd, (0, 1, 2)),
        _first_repeat(dd, (0,), REPEAT_IN_ROW),
        _first_repeat(dd, (1,), REPEAT_IN_ROW),
        _first_repeat(dd, (2,), REPEAT_IN_ROW),
    ):
        if probe is not None:
            return probe
    return ConditionReport(True)


def _require_normalized(matrix: ExponentMatrix) -> None:
    if not matrix.normalized:
        raise ValueError(
            "matrix must be normalized (all-zero first row and first column)"
        )


def check_girth8_etsfree(matrix: ExponentMatrix) -> ConditionReport:
    """Conditions on DD for a girth-8 code free of (a<=8, b<=3) trapping sets.

    Passes iff DD has no zero component anywhere, no component of rows 0-1
    doubles to zero, and the 4*C(n,2) components of rows 0 and 1 are
    pairwise distinct.  Requires a normalized matrix.
    """
    _require_normalized(matrix)
    dd = pair_difference_matrix(matrix)
    for probe in (
        _first_zero(dd, (0, 1, 2)),
        _first_doubling(dd, (0, 1)),
        _first_repeat(dd, (0,), REPEAT_IN_ROW),
        _first_repeat(dd, (1,), REPEAT_IN_ROW),
        _first_repeat(dd, (0, 1), REPEAT_ACROSS_ROWS_01),
    ):
        if probe is not None:
            return probe
    return ConditionReport(True)


# the six comparisons per column triple; each one is a 6-cycle instance
# expressed through first components of DD rows 0 and 1
def _six_cycle_violations(dd: PairDifferenceMatrix, j0: int, j1: int, j2: int):
    degree = dd.lifting_degree
    d0 = dd.component
    a01, a02, a12 = d0(0, j0, j1), d0(0, j0, j2), d0(0, j1, j2)
    b01, b02, b12 = d0(1, j0, j1), d0(1, j0, j2), d0(1, j1, j2)
    checks = (
        (1, a01, b02),
        (2, a01, (degree - b12) % degree),
        (3, a02, b12),
        (4, a02, b01),
        (5, a12, (degree - b01) % degree),
        (6, a12, b02),
    )
    for index, lhs, rhs in checks:
        if lhs == rhs:
            yield index, lhs, rhs


def check_six_cycle_conditions(matrix: ExponentMatrix) -> ConditionReport:
    """Inequalities over DD rows 0-1 that hold iff the lifted graph is
    6-cycle free.

    Six comparisons are evaluated for every column triple j0 < j1 < j2;
    the matrix must be normalized, which is what lets 6-cycle sums reduce
    to components of the first two DD rows.  Vacuously passes for n = 2.
    """
    _require_normalized(matrix)
    dd = pair_difference_matrix(matrix)
    n = matrix.n_cols
    for j0, j1, j2 in combinations(range(n), 3):
        for index, lhs, _rhs in _six_cycle_violations(dd, j0, j1, j2):
            return _fail(
                SIX_CYCLE_INEQUALITY,
                pair_columns=((j0, j1), (j0, j2), (j1, j2)),
                components=(lhs,),
                inequality_index=index,
            )
    return ConditionReport(True)


def lower_bound_lifting(girth: int, n: int) -> int:
    """Smallest lifting degree compatible with the distinctness conditions."""
    if girth not in (6, 8):
        raise ValueError("girth must be 6 or 8")
    if n < 2:
        raise ValueError("need n >= 2")
    return n * n - n if girth == 6 else 2 * n * (n - 1)


def five_one_ets_impossible(matrix: ExponentMatrix) -> bool:
    """(5,1) elementary trapping sets cannot occur in fully connected codes.

    A (5,1) set needs seven degree-2 checks on five variable nodes; checks
    in one block row form a matching on the variables (a circulant column
    never carries two 1-components), and three matchings on five vertices
    hold at most six edges.  True for every valid input by construction.
    """
    return matrix.n_cols >= 2
