"""Exact short-cycle existence tests on exponent matrices.

The lifted Tanner graph has a cycle of length 2k exactly when a closed,
non-backtracking walk over the exponent-matrix blocks has alternating shift
sum 0 mod N: rows m_0..m_{k-1} and columns n_0..n_{k-1} with cyclically
adjacent entries distinct and

    sum_i  b[m_i][n_i] - b[m_i][n_{i+1}]  = 0  (mod N),   n_k = n_0.

Direct enumeration of these instances for k in {2, 3, 4} is the ground
truth here; the pair-difference-matrix shortcuts are fast paths that the
tests validate against it and against breadth-first search on the lifted
graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product

from .matrices import ExponentMatrix, PairDifferenceMatrix, ROW_PAIRS

# Cyclically adjacent-distinct row sequences of length 4 over three rows:
# either two rows alternating or three rows with one repeated at opposite
# positions.  With only three rows these 18 sequences are exhaustive.
_ROW_SEQS_K4 = tuple(
    seq
    for seq in product(range(3), repeat=4)
    if all(seq[i] != seq[(i + 1) % 4] for i in range(4))
)


@dataclass(frozen=True)
class CycleWitness:
    """One vanishing cycle-condition instance.

    ``rows``/``cols`` name the visited blocks; ``residue_sum`` is a value
    of the alternating sum, always 0 mod N.
    """

    length: int
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    residue_sum: int


def evaluate_cycle_sum(
    matrix: ExponentMatrix, rows: tuple[int, ...], cols: tuple[int, ...]
) -> int:
    """Alternating shift sum of one instance (unreduced)."""
    k = len(rows)
    b = matrix.entries
    return sum(b[rows[i]][cols[i]] - b[rows[i]][cols[(i + 1) % k]] for i in range(k))


def _col_seqs(n: int, k: int):
    """Column sequences with cyclically adjacent entries distinct."""
    for seq in product(range(n), repeat=k):
        if all(seq[i] != seq[(i + 1) % k] for i in range(k)):
            yield seq


def _first_vanishing_k2(matrix: ExponentMatrix) -> CycleWitness | None:
    b = matrix.entries
    degree = matrix.lifting_degree
    for p, q in ROW_PAIRS:
        for j, jp in combinations(range(matrix.n_cols), 2):
            s = b[p][j] - b[p][jp] + b[q][jp] - b[q][j]
            if s % degree == 0:
                return CycleWitness(4, (p, q), (j, jp), s)
    return None


def _first_vanishing_k3(matrix: ExponentMatrix) -> CycleWitness | None:
    if matrix.n_cols < 3:
        return None
    b = matrix.entries
    degree = matrix.lifting_degree
    for cols in combinations(range(matrix.n_cols), 3):
        for rows in permutations((0, 1, 2)):
            s = sum(
                b[rows[i]][cols[i]] - b[rows[i]][cols[(i + 1) % 3]]
                for i in range(3)
            )
            if s % degree == 0:
                return CycleWitness(6, rows, cols, s)
    return None


def _first_vanishing_k4(matrix: ExponentMatrix) -> CycleWitness | None:
    b = matrix.entries
    degree = matrix.lifting_degree
    for rows in _ROW_SEQS_K4:
        r0, r1, r2, r3 = rows
        b0, b1, b2, b3 = b[r0], b[r1], b[r2], b[r3]
        for cols in _col_seqs(matrix.n_cols, 4):
            c0, c1, c2, c3 = cols
            s = (
                b0[c0] - b0[c1] + b1[c1] - b1[c2]
                + b2[c2] - b2[c3] + b3[c3] - b3[c0]
            )
            if s % degree == 0:
                return CycleWitness(8, rows, cols, s)
    return None


def girth_from_exponent(matrix: ExponentMatrix) -> int | None:
    """Smallest cycle length in {4, 6, 8}, or None for girth >= 10.

    A vanishing k=2 or k=3 instance is always a simple 4- or 6-cycle of the
    lifted graph; once those are ruled out, every vanishing k=4 instance
    lifts to a simple 8-cycle, so the result agrees with breadth-first
    search on the lifted graph capped at 10.
    """
    if _first_vanishing_k2(matrix) is not None:
        return 4
    if _first_vanishing_k3(matrix) is not None:
        return 6
    if _first_vanishing_k4(matrix) is not None:
        return 8
    return None


def four_cycle_exists(dd: PairDifferenceMatrix) -> CycleWitness | None:
    """Witness iff some component of DD is zero mod N."""
    for i in range(3):
        p, q = ROW_PAIRS[i]
        for value, t, _side in dd.row_components(i):
            if value == 0:
                j, jp = dd.column_index_pairs[t]
                return CycleWitness(4, (p, q), (j, jp), 0)
    return None


def six_cycle_exists(matrix: ExponentMatrix) -> CycleWitness | None:
    """Direct enumeration over all column triples and row assignments.

    A 6-cycle necessarily uses all three rows and three distinct columns,
    so this enumeration is exhaustive; returns None when n < 3.
    """
    return _first_vanishing_k3(matrix)


def _ordered_pair(dd: PairDifferenceMatrix, t: int, side: int) -> tuple[int, int]:
    """Source columns (e, f) such that the component equals D[i][e] - D[i][f]."""
    j, jp = dd.column_index_pairs[t]
    return (j, jp) if side == 0 else (jp, j)


def _scan_row(dd, i, *, check_doubling):
    """First violation in row i of DD: zero, doubled-to-zero, or repeat.

    Returns (kind, data) or None; scan order is pair columns in lex order,
    first component then second.
    """
    degree = dd.lifting_degree
    seen: dict[int, tuple[int, int]] = {}
    for value, t, side in dd.row_components(i):
        if value == 0:
            return "zero", (t, side)
        if check_doubling and (2 * value) % degree == 0:
            return "doubling", (t, side)
        prev = seen.get(value)
        if prev is not None and prev[0] != t:
            return "repeat", (prev, (t, side))
        seen.setdefault(value, (t, side))
    return None


def eight_cycle_two_rows_exists(
    dd: PairDifferenceMatrix, i: int
) -> CycleWitness | None:
    """8-cycle condition on the single row pair encoded by DD row i.

    Fires exactly when row i of DD has a zero component, a component that
    doubles to 0 mod N, or a repeated component across pair columns.
    """
    p, q = ROW_PAIRS[i]
    hit = _scan_row(dd, i, check_doubling=True)
    if hit is None:
        return None
    kind, data = hit
    if kind in ("zero", "doubling"):
        t, _side = data
        j, jp = dd.column_index_pairs[t]
        # rows (p,q,p,q) over columns (j,jp,j,jp): sum = 2(D[i][j]-D[i][jp])
        return CycleWitness(8, (p, q, p, q), (j, jp, j, jp), 0)
    (t1, s1), (t2, s2) = data
    e, f = _ordered_pair(dd, t1, s1)
    g, h = _ordered_pair(dd, t2, s2)
    # D[i][e]-D[i][f] = D[i][g]-D[i][h], so the alternating sum over
    # columns (e,f,h,g) vanishes.  f=h or g=e would force a zero component
    # elsewhere in the row, which the zero scan would have caught first.
    if f == h or g == e:
        raise AssertionError("repeat scan reached a zero-component corner")
    return CycleWitness(8, (p, q, p, q), (e, f, h, g), 0)


# Relevant DD rows per repeated exponent row u, and the exponent-row
# walk pattern of the corresponding three-row instances.
_THREE_ROW_DD_ROWS = {0: (0, 1), 1: (0, 2), 2: (1, 2)}
_THREE_ROW_PATTERN = {0: (0, 1, 0, 2), 1: (1, 0, 1, 2), 2: (2, 0, 2, 1)}


def _three_row_sum(dd, u, cols) -> int:
    """Alternating sum mod N of the three-row instance with repeated row u."""
    x0, x1, x2, x3 = cols
    if u == 0:
        s = dd.component(1, x0, x3) + dd.component(0, x2, x1)
    elif u == 1:
        s = dd.component(2, x0, x3) + dd.component(0, x1, x2)
    else:
        s = dd.component(2, x3, x0) + dd.component(1, x1, x2)
    return s % dd.lifting_degree


def eight_cycle_three_rows_exists(
    dd: PairDifferenceMatrix, u: int
) -> CycleWitness | None:
    """8-cycle condition for instances whose repeated exponent row is u.

    Fires exactly when the union of components of the two relevant DD rows
    contains a zero or a repeated value.  Degenerate coincidences are
    mapped to the vanishing instance they actually imply, which may be a
    doubled four-cycle or a 6-cycle.
    """
    if u not in (0, 1, 2):
        raise ValueError(f"repeated row must be 0, 1 or 2, got {u}")
    ra, rb = _THREE_ROW_DD_ROWS[u]
    pattern = _THREE_ROW_PATTERN[u]

    # zeros first, in row order
    for r in (ra, rb):
        for value, t, _side in dd.row_components(r):
            if value == 0:
                p, q = ROW_PAIRS[r]
                j, jp = dd.column_index_pairs[t]
                return CycleWitness(8, (p, q, p, q), (j, jp, j, jp), 0)

    seen: dict[int, tuple[int, int, int]] = {}
    for r in (ra, rb):
        for value, t, side in dd.row_components(r):
            prev = seen.get(value)
            if prev is None:
                seen[value] = (r, t, side)
                continue
            rp, tp, sp = prev
            if rp == r and tp == t:
                # both components of one element coincide: 2*value = 0 mod N
                p, q = ROW_PAIRS[r]
                a, b = dd.column_index_pairs[t]
                return CycleWitness(8, (p, q, p, q), (a, b, a, b), 0)
            if rp == r:
                # repeat within one row: a two-row instance of that pair
                p, q = ROW_PAIRS[r]
                e, f = _ordered_pair(dd, tp, sp)
                g, h = _ordered_pair(dd, t, side)
                if f == h or g == e:
                    raise AssertionError(
                        "within-row repeat reached a zero-component corner"
                    )
                return CycleWitness(8, (p, q, p, q), (e, f, h, g), 0)
            return _cross_row_witness(dd, u, pattern, (tp, sp), (t, side))
    return None


def _cross_row_witness(dd, u, pattern, occ_a, occ_b) -> CycleWitness:
    """Vanishing instance implied by equal components in DD rows ra and rb."""
    ra, rb = _THREE_ROW_DD_ROWS[u]
    ta, sa = occ_a
    tb, sb = occ_b
    e, f = _ordered_pair(dd, ta, sa)
    g, h = _ordered_pair(dd, tb, sb)

    if ta == tb:
        # same pair column: try the two-column instance of this family
        a, b = dd.column_index_pairs[ta]
        cols = (a, b, a, b)
        if _three_row_sum(dd, u, cols) == 0:
            return CycleWitness(8, pattern, cols, 0)
        # otherwise the coincidence collapses to a zero component in the
        # remaining DD row, i.e. a doubled four-cycle on that row pair
        rc = 3 - ra - rb
        if dd.component(rc, a, b) != 0:
            raise AssertionError("same-pair coincidence did not collapse")
        p, q = ROW_PAIRS[rc]
        return CycleWitness(8, (p, q, p, q), (a, b, a, b), 0)

    # distinct pair columns: the four-column arrangement of this family,
    # with the shared-column corners degenerating to 6-cycles
    if u == 0:
        cols, corner = (h, f, e, g), (e == g, f == h)
    elif u == 1:
        cols, corner = (h, e, f, g), (h == e, f == g)
    else:
        cols, corner = (g, e, f, h), (g == e, f == h)
    if not any(corner):
        if _three_row_sum(dd, u, cols) != 0:
            raise AssertionError("four-column arrangement does not vanish")
        return CycleWitness(8, pattern, cols, 0)
    first_corner = corner[0]
    if u == 0:
        rows6, cols6 = ((1, 2, 0), (f, e, h)) if first_corner else ((0, 2, 1), (e, g, f))
    elif u == 1:
        rows6, cols6 = ((0, 1, 2), (e, f, g)) if first_corner else ((0, 2, 1), (e, f, h))
    else:
        rows6, cols6 = ((0, 2, 1), (e, f, h)) if first_corner else ((0, 1, 2), (e, f, g))
    return CycleWitness(6, rows6, cols6, 0)
