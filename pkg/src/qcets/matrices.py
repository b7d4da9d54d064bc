"""Exponent matrices of fully connected (3,n)-regular QC-LDPC codes.

An exponent matrix holds one cyclic-shift value per circulant block of the
parity-check matrix.  Two derived tables drive all short-cycle and
trapping-set conditions in this package:

* the signed difference matrix ``D`` whose rows are the pairwise
  differences of the three exponent rows, and
* the pair-difference matrix ``DD`` whose entry in row ``i`` and pair
  column ``(j, j')`` is the complementary residue pair
  ``(D[i][j] - D[i][j'] mod N, D[i][j'] - D[i][j] mod N)``.

``D`` keeps signed, unreduced integers; ``DD`` is always reduced to
``[0, N)``.
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from itertools import combinations
from typing import TextIO

ROW_PAIRS = ((0, 1), (0, 2), (1, 2))  # D/DD row i holds differences of these exponent rows


class MatrixFormatError(ValueError):
    """Raised when an exponent-matrix text file is malformed."""


@dataclass(frozen=True)
class ExponentMatrix:
    """A 3 x n table of shift values over Z_N, one per circulant block.

    All blocks are circulant permutation matrices (fully connected code,
    column weight 3, row weight n).
    """

    entries: tuple[tuple[int, ...], ...]
    lifting_degree: int

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        n = self.lifting_degree
        if n < 2:
            raise ValueError(f"lifting degree must be >= 2, got {n}")
        if len(rows) != 3:
            raise ValueError(f"expected exactly 3 rows, got {len(rows)}")
        widths = {len(row) for row in rows}
        if len(widths) != 1:
            raise ValueError(f"ragged rows: widths {sorted(widths)}")
        if self.n_cols < 2:
            raise ValueError(f"need at least 2 columns, got {self.n_cols}")
        for i, row in enumerate(rows):
            for j, x in enumerate(row):
                if not 0 <= x < n:
                    raise ValueError(
                        f"entry ({i},{j})={x} outside [0, {n})"
                    )

    @property
    def n_cols(self) -> int:
        return len(self.entries[0])

    @property
    def normalized(self) -> bool:
        """True when the first row and the first column are all-zero."""
        return all(x == 0 for x in self.entries[0]) and all(
            row[0] == 0 for row in self.entries
        )

    def row_permuted(self, order: tuple[int, int, int]) -> "ExponentMatrix":
        """Relabel the three rows; the lifted graph is unchanged up to renaming."""
        if sorted(order) != [0, 1, 2]:
            raise ValueError(f"row order must permute (0, 1, 2), got {order}")
        return ExponentMatrix(
            tuple(self.entries[i] for i in order), self.lifting_degree
        )

    @classmethod
    def zeros(cls, n_cols: int, lifting_degree: int) -> "ExponentMatrix":
        return cls(tuple((0,) * n_cols for _ in range(3)), lifting_degree)

    @classmethod
    def from_free_rows(
        cls, row1: tuple[int, ...], row2: tuple[int, ...], lifting_degree: int
    ) -> "ExponentMatrix":
        """Build a normalized matrix from the two free rows (zero row and
        zero column prepended)."""
        if len(row1) != len(row2):
            raise ValueError("free rows must have equal length")
        n = len(row1) + 1
        return cls(
            ((0,) * n, (0,) + tuple(row1), (0,) + tuple(row2)), lifting_degree
        )


@dataclass(frozen=True)
class DifferenceMatrix:
    """Signed pairwise row differences of an exponent matrix.

    Row 0 holds ``b0j - b1j``, row 1 holds ``b0j - b2j``, row 2 holds
    ``b1j - b2j``.  Entries are not reduced modulo N.
    """

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        if len(rows) != 3 or len({len(r) for r in rows}) != 1:
            raise ValueError("difference matrix must be 3 x n")
        for j in range(len(rows[0])):
            if rows[0][j] - rows[1][j] + rows[2][j] != 0:
                raise ValueError(
                    f"column {j} violates row0 - row1 + row2 = 0"
                )

    @property
    def n_cols(self) -> int:
        return len(self.entries[0])


@dataclass(frozen=True)
class PairDifferenceMatrix:
    """Residue pairs from subtracting every two columns of a difference matrix.

    Column ``t`` corresponds to the ``t``-th pair ``(j, j')`` with
    ``j < j'`` in lexicographic order; the two components of every element
    sum to 0 mod N.
    """

    lifting_degree: int
    column_index_pairs: tuple[tuple[int, int], ...]
    entries: tuple[tuple[tuple[int, int], ...], ...]

    def __post_init__(self) -> None:
        n_mod = self.lifting_degree
        if len(self.entries) != 3:
            raise ValueError("pair-difference matrix must have 3 rows")
        for row in self.entries:
            if len(row) != len(self.column_index_pairs):
                raise ValueError("row width must match the pair list")
            for x, y in row:
                if not (0 <= x < n_mod and 0 <= y < n_mod):
                    raise ValueError("components must lie in [0, N)")
                if (x + y) % n_mod != 0:
                    raise ValueError("components must sum to 0 mod N")

    @property
    def n_pairs(self) -> int:
        return len(self.column_index_pairs)

    def pair_index(self, j: int, jp: int) -> int:
        """Index of the pair column for source columns ``j < jp``."""
        return self.column_index_pairs.index((j, jp))

    def component(self, row: int, j: int, jp: int) -> int:
        """``(D[row][j] - D[row][jp]) mod N`` for any ``j != jp``."""
        if j < jp:
            return self.entries[row][self.pair_index(j, jp)][0]
        return self.entries[row][self.pair_index(jp, j)][1]

    def row_components(self, row: int) -> list[tuple[int, int, int]]:
        """All ``(value, pair_column, side)`` of one row, scan order."""
        out = []
        for t, (x, y) in enumerate(self.entries[row]):
            out.append((x, t, 0))
            out.append((y, t, 1))
        return out


@dataclass(frozen=True)
class CodeProfile:
    """Target girth together with the trapping-set classes to exclude."""

    target_girth: int
    ets_exclusions: frozenset[tuple[int, int]]
    harmfulness_ratio_rule: str = "b/a<1"

    def __post_init__(self) -> None:
        if self.target_girth not in (6, 8):
            raise ValueError("target girth must be 6 or 8")
        for a, b in self.ets_exclusions:
            if not b < a:
                raise ValueError(f"excluded class ({a},{b}) is not harmful")

    @classmethod
    def girth6(cls) -> "CodeProfile":
        return cls(6, frozenset({(4, 0), (4, 2), (5, 1)}))

    @classmethod
    def girth8(cls) -> "CodeProfile":
        classes = frozenset(
            (a, b) for a in range(1, 9) for b in range(0, 4) if b < a
        )
        return cls(8, classes)

    @property
    def enumeration_bounds(self) -> tuple[int, int]:
        """Default (a_max, b_max) for the oracle sweep matching the profile."""
        return (5, 2) if self.target_girth == 6 else (8, 3)


def build_difference_matrix(matrix: ExponentMatrix) -> DifferenceMatrix:
    """Signed row-pair differences of an exponent matrix."""
    rows = matrix.entries
    return DifferenceMatrix(
        tuple(
            tuple(rows[p][j] - rows[q][j] for j in range(matrix.n_cols))
            for p, q in ROW_PAIRS
        )
    )


def build_pair_difference_matrix(
    diff: DifferenceMatrix, lifting_degree: int
) -> PairDifferenceMatrix:
    """Residue pairs of all column differences, pair columns in lex order."""
    if lifting_degree < 2:
        raise ValueError("lifting degree must be >= 2")
    pairs = tuple(combinations(range(diff.n_cols), 2))
    entries = tuple(
        tuple(
            (
                (diff.entries[i][j] - diff.entries[i][jp]) % lifting_degree,
                (diff.entries[i][jp] - diff.entries[i][j]) % lifting_degree,
            )
            for j, jp in pairs
        )
        for i in range(3)
    )
    return PairDifferenceMatrix(lifting_degree, pairs, entries)


def pair_difference_matrix(matrix: ExponentMatrix) -> PairDifferenceMatrix:
    """Shorthand for building DD straight from an exponent matrix."""
    return build_pair_difference_matrix(
        build_difference_matrix(matrix), matrix.lifting_degree
    )


# ---------------------------------------------------------------------------
# text format
#
# header line "3 n N", then 3 lines of n whitespace-separated integers;
# lines starting with '#' are comments.  The canonical form has no comments
# and LF line endings.


def _data_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        out.append((lineno, stripped))
    return out


def _parse_ints(lineno: int, line: str) -> list[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError as exc:
        raise MatrixFormatError(f"line {lineno}: {exc}") from None


def read_exponent_matrix(source: str | TextIO) -> ExponentMatrix:
    """Parse the canonical text format, reporting errors with line numbers."""
    text = source if isinstance(source, str) else source.read()
    lines = _data_lines(text)
    if not lines:
        raise MatrixFormatError("empty input: missing header line")
    lineno, header = lines[0]
    fields = _parse_ints(lineno, header)
    if len(fields) != 3:
        raise MatrixFormatError(
            f"line {lineno}: header must be '3 n N', got {len(fields)} fields"
        )
    m, n, degree = fields
    if m != 3:
        raise MatrixFormatError(f"line {lineno}: row count must be 3, got {m}")
    if n < 2:
        raise MatrixFormatError(f"line {lineno}: column count must be >= 2, got {n}")
    if degree < 2:
        raise MatrixFormatError(f"line {lineno}: lifting degree must be >= 2, got {degree}")
    if len(lines) != 4:
        raise MatrixFormatError(
            f"expected 3 matrix rows after the header, found {len(lines) - 1}"
        )
    rows = []
    for lineno, line in lines[1:]:
        row = _parse_ints(lineno, line)
        if len(row) != n:
            raise MatrixFormatError(
                f"line {lineno}: expected {n} entries, got {len(row)}"
            )
        for j, x in enumerate(row):
            if not 0 <= x < degree:
                raise MatrixFormatError(
                    f"line {lineno}: entry {x} (column {j}) outside [0, {degree})"
                )
        rows.append(tuple(row))
    return ExponentMatrix(tuple(rows), degree)


def read_table_fragment(source: str | TextIO) -> ExponentMatrix:
    """Parse table-style input: header "2 m N" plus the two free rows.

    The all-zero first row and first column are prepended, giving the full
    normalized 3 x (m+1) matrix.
    """
    text = source if isinstance(source, str) else source.read()
    lines = _data_lines(text)
    if not lines:
        raise MatrixFormatError("empty input: missing header line")
    lineno, header = lines[0]
    fields = _parse_ints(lineno, header)
    if len(fields) != 3 or fields[0] != 2:
        raise MatrixFormatError(
            f"line {lineno}: table fragment header must be '2 m N'"
        )
    _, m, degree = fields
    if m < 1:
        raise MatrixFormatError(f"line {lineno}: need at least one free column")
    if degree < 2:
        raise MatrixFormatError(f"line {lineno}: lifting degree must be >= 2, got {degree}")
    if len(lines) != 3:
        raise MatrixFormatError(
            f"expected 2 matrix rows after the header, found {len(lines) - 1}"
        )
    rows = []
    for lineno, line in lines[1:]:
        row = _parse_ints(lineno, line)
        if len(row) != m:
            raise MatrixFormatError(
                f"line {lineno}: expected {m} entries, got {len(row)}"
            )
        for j, x in enumerate(row):
            if not 0 <= x < degree:
                raise MatrixFormatError(
                    f"line {lineno}: entry {x} (column {j}) outside [0, {degree})"
                )
        rows.append(tuple(row))
    return ExponentMatrix.from_free_rows(rows[0], rows[1], degree)


def write_exponent_matrix(matrix: ExponentMatrix) -> str:
    """Canonical text form: write(read(x)) is the identity on canonical x."""
    buf = io.StringIO()
    buf.write(f"3 {matrix.n_cols} {matrix.lifting_degree}\n")
    for row in matrix.entries:
        buf.write(" ".join(str(x) for x in row))
        buf.write("\n")
    return buf.getvalue()
