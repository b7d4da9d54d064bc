"""Backtracking search for exponent matrices passing the girth-6 or
girth-8 trapping-set conditions.

Matrices are normalized (all-zero first row and column) and built column
by column; the component tables of DD are maintained incrementally so a
candidate column is accepted or rejected with O(columns-so-far) probes.
Column permutations of a solution lift to the same graph, so by default
the second-row entries are required to increase strictly, which keeps the
enumeration complete up to column permutation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .conditions import check_girth6_etsfree, check_girth8_etsfree
from .ets import classify_harmful, enumerate_ets
from .matrices import CodeProfile, ExponentMatrix
from .tanner import bfs_girth, lift


class SearchLimitError(RuntimeError):
    """Raised when the candidate-step ceiling is exceeded."""


class OracleDisagreement(RuntimeError):
    """A matrix passed its condition checker but failed graph verification.

    The conditions are proven sufficient, so this always indicates an
    implementation bug rather than a property of the input.
    """


@dataclass(frozen=True)
class SearchSpec:
    n: int
    lifting_range: tuple[int, int]
    profile: CodeProfile
    mode: str = "first-found"  # or "exhaustive"
    sort_columns: bool = True
    third_row_doubling: bool = False
    unit_scaling_anchor: bool = False
    verify_with_oracle: bool = False
    max_steps: int | None = None

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError("need n >= 2")
        if self.mode not in ("first-found", "exhaustive"):
            raise ValueError(f"unknown mode {self.mode!r}")
        lo, hi = self.lifting_range
        if lo < 2:
            raise ValueError("lifting range must start at 2 or above")
        if hi < lo:
            raise ValueError(f"empty lifting range {self.lifting_range}")


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n) if n % d == 0]


class _Track:
    """Distinctness bookkeeping for one DD row during column assignment.

    ``sidon`` tracks forbid repeated, zero or (optionally) doubling
    components among all pairwise key differences; the component table may
    be shared between tracks to enforce joint distinctness across rows.
    ``values`` tracks only forbid repeated keys, i.e. zero components in
    that row.
    """

    __slots__ = ("degree", "kind", "doubling", "table", "keys")

    def __init__(
        self, degree: int, kind: str, doubling: bool, table: bytearray | None = None
    ):
        self.degree = degree
        self.kind = kind
        self.doubling = doubling
        self.table = bytearray(degree) if table is None else table
        self.keys: list[int] = [0]  # normalized first column
        if kind == "values":
            self.table[0] = 1

    def try_add(self, key: int) -> list[int] | None:
        """Mark the components the new key introduces; None on conflict."""
        degree = self.degree
        table = self.table
        if self.kind == "values":
            if table[key]:
                return None
            table[key] = 1
            self.keys.append(key)
            return []
        marked: list[int] = []
        for prev in self.keys:
            d = (key - prev) % degree
            if d == 0:
                break
            comp = degree - d
            if self.doubling and comp == d:
                break
            if table[d] or table[comp]:
                break
            table[d] = table[comp] = 1
            marked.append(d)
            marked.append(comp)
        else:
            self.keys.append(key)
            return marked
        for m in marked:
            table[m] = 0
        return None

    def remove(self, key: int, marked: list[int]) -> None:
        self.keys.pop()
        if self.kind == "values":
            self.table[key] = 0
        else:
            for m in marked:
                self.table[m] = 0


def _make_tracks(degree: int, girth: int) -> tuple[_Track, _Track, _Track]:
    """Tracks for the keys x = b1j, y = b2j and x - y (DD rows 0, 1, 2)."""
    if girth == 6:
        return (
            _Track(degree, "sidon", doubling=True),
            _Track(degree, "sidon", doubling=True),
            _Track(degree, "sidon", doubling=True),
        )
    shared = bytearray(degree)
    return (
        _Track(degree, "sidon", doubling=True, table=shared),
        _Track(degree, "sidon", doubling=True, table=shared),
        _Track(degree, "values", doubling=False),
    )


def _search_at(
    n: int,
    degree: int,
    girth: int,
    *,
    sort_columns: bool,
    third_row_doubling: bool,
    unit_scaling_anchor: bool,
    max_steps: int | None,
) -> Iterator[ExponentMatrix]:
    """All normalized solutions at one lifting degree, lexicographic order."""
    track_x, track_y, track_d = _make_tracks(degree, girth)
    row1: list[int] = []
    row2: list[int] = []
    free_cols = n - 1
    steps = 0

    def candidates_x(depth: int) -> Iterator[int]:
        if depth == 0 and unit_scaling_anchor:
            yield from _divisors(degree)
            return
        lo = row1[-1] + 1 if (sort_columns and row1) else 1
        hi = degree - (free_cols - depth - 1) if sort_columns else degree
        yield from range(lo, hi)

    def descend(depth: int) -> Iterator[ExponentMatrix]:
        nonlocal steps
        for x in candidates_x(depth):
            marked_x = track_x.try_add(x)
            if marked_x is None:
                continue
            ys = ((2 * x) % degree,) if third_row_doubling else range(1, degree)
            for y in ys:
                steps += 1
                if max_steps is not None and steps > max_steps:
                    raise SearchLimitError(
                        f"search exceeded {max_steps} candidate steps"
                    )
                if y == 0:
                    continue
                marked_y = track_y.try_add(y)
                if marked_y is None:
                    continue
                marked_d = track_d.try_add((x - y) % degree)
                if marked_d is None:
                    track_y.remove(y, marked_y)
                    continue
                row1.append(x)
                row2.append(y)
                if depth + 1 == free_cols:
                    yield ExponentMatrix.from_free_rows(
                        tuple(row1), tuple(row2), degree
                    )
                else:
                    yield from descend(depth + 1)
                row2.pop()
                row1.pop()
                track_d.remove((x - y) % degree, marked_d)
                track_y.remove(y, marked_y)
            track_x.remove(x, marked_x)

    yield from descend(0)


def verify_matrix_with_oracle(
    matrix: ExponentMatrix, profile: CodeProfile
) -> None:
    """Raise OracleDisagreement unless girth and trapping-set freedom hold."""
    graph = lift(matrix)
    girth = bfs_girth(graph, cap=10)
    if girth is not None and girth < profile.target_girth:
        raise OracleDisagreement(
            f"checker passed but lifted girth is {girth} < {profile.target_girth}"
        )
    a_max, b_max = profile.enumeration_bounds
    found = {
        (r.a, r.b) for r in classify_harmful(enumerate_ets(graph, a_max, b_max))
    }
    bad = found & profile.ets_exclusions
    if bad:
        raise OracleDisagreement(
            f"checker passed but excluded trapping sets exist: {sorted(bad)}"
        )


def search(spec: SearchSpec) -> Iterator[ExponentMatrix]:
    """Matrices passing the profile's condition checker, in deterministic
    order (lifting degree ascending, then lexicographic by free entries)."""
    checker = (
        check_girth6_etsfree
        if spec.profile.target_girth == 6
        else check_girth8_etsfree
    )
    lo, hi = spec.lifting_range
    for degree in range(lo, hi + 1):
        for matrix in _search_at(
            spec.n,
            degree,
            spec.profile.target_girth,
            sort_columns=spec.sort_columns,
            third_row_doubling=spec.third_row_doubling,
            unit_scaling_anchor=spec.unit_scaling_anchor,
            max_steps=spec.max_steps,
        ):
            report = checker(matrix)
            if not report.passed:
                raise AssertionError(
                    f"incremental search emitted a failing matrix: "
                    f"{report.violated_condition}"
                )
            if spec.verify_with_oracle:
                verify_matrix_with_oracle(matrix, spec.profile)
            yield matrix
            if spec.mode == "first-found":
                return


def find_min_lifting(
    n: int,
    profile: CodeProfile,
    n_start: int,
    n_stop: int,
    *,
    verify_with_oracle: bool = False,
    third_row_doubling: bool = False,
    max_steps: int | None = None,
) -> tuple[int, ExponentMatrix] | None:
    """Smallest lifting degree in [n_start, n_stop] admitting a passing
    matrix, with one witness; None when the range is exhausted."""
    for degree in range(n_start, n_stop + 1):
        spec = SearchSpec(
            n=n,
            lifting_range=(degree, degree),
            profile=profile,
            mode="first-found",
            third_row_doubling=third_row_doubling,
            verify_with_oracle=verify_with_oracle,
            max_steps=max_steps,
        )
        for matrix in search(spec):
            return degree, matrix
    return None
