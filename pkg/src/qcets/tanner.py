"""Lifted Tanner graphs, exact girth, and short-cycle existence oracles.

Each exponent-matrix block (i, j) contributes a circulant permutation:
variable node (j, t) connects to check node (i, (t + b_ij) mod N).  Node
numbering is block-major, shift-minor: variable (j, t) -> j*N + t, check
(i, s) -> i*N + s.  Shifting every node's in-block index by +1 mod N is an
automorphism, so cycle searches only root at shift-0 nodes.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .matrices import ExponentMatrix


@dataclass(frozen=True)
class TannerGraph:
    n_cols: int
    lifting_degree: int
    entries: tuple[tuple[int, ...], ...]
    var_adj: tuple[tuple[int, int, int], ...]
    chk_adj: tuple[tuple[int, ...], ...]

    @property
    def num_variables(self) -> int:
        return self.n_cols * self.lifting_degree

    @property
    def num_checks(self) -> int:
        return 3 * self.lifting_degree

    def variable_index(self, j: int, t: int) -> int:
        return j * self.lifting_degree + t

    def check_index(self, i: int, s: int) -> int:
        return i * self.lifting_degree + s

    def combined_adjacency(self) -> list[tuple[int, ...]]:
        """One adjacency list over variables then checks (global ids)."""
        n_var = self.num_variables
        adj: list[tuple[int, ...]] = [
            tuple(c + n_var for c in row) for row in self.var_adj
        ]
        adj.extend(self.chk_adj)
        return adj


def lift(matrix: ExponentMatrix) -> TannerGraph:
    """Expand every block into its circulant permutation."""
    n, degree = matrix.n_cols, matrix.lifting_degree
    b = matrix.entries
    var_adj = tuple(
        tuple(i * degree + (t + b[i][j]) % degree for i in range(3))
        for j in range(n)
        for t in range(degree)
    )
    chk_adj = tuple(
        tuple(j * degree + (s - b[i][j]) % degree for j in range(n))
        for i in range(3)
        for s in range(degree)
    )
    return TannerGraph(n, degree, b, var_adj, chk_adj)


def _shortest_cycle_through(adj, root: int, bound: int) -> int | None:
    """Shortest cycle through ``root`` if below ``bound``.

    For each edge (root, c): BFS for the shortest root-to-c path avoiding
    that edge; the edge closes the path into a simple cycle.
    """
    best: int | None = None
    for skipped in adj[root]:
        dist_cap = (best if best is not None else bound) - 2
        if dist_cap < 1:
            break
        dist = {root: 0}
        queue = deque((root,))
        while queue:
            node = queue.popleft()
            d = dist[node]
            if d >= dist_cap:
                continue
            for nxt in adj[node]:
                if node == root and nxt == skipped:
                    continue
                if nxt not in dist:
                    dist[nxt] = d + 1
                    queue.append(nxt)
        if skipped in dist:
            cycle = dist[skipped] + 1
            if best is None or cycle < best:
                best = cycle
    return best


def bfs_girth(graph: TannerGraph, cap: int = 10) -> int | None:
    """Exact girth when below ``cap``; None means girth at least ``cap``.

    Every cycle passes through a variable node, and the shift automorphism
    maps it onto a cycle through shift 0 of the same block, so rooting at
    the n shift-0 variable nodes suffices.
    """
    adj = graph.combined_adjacency()
    best: int | None = None
    for j in range(graph.n_cols):
        bound = best if best is not None else cap
        found = _shortest_cycle_through(adj, graph.variable_index(j, 0), bound)
        if found is not None and (best is None or found < best):
            best = found
    return best


def has_four_cycle(graph: TannerGraph) -> bool:
    """Two variables sharing two checks; roots at shift-0 checks suffice."""
    n_var = graph.num_variables
    for i in range(3):
        c0 = graph.check_index(i, 0)
        for v1, v2 in combinations(graph.chk_adj[c0], 2):
            shared = set(graph.var_adj[v1]) & set(graph.var_adj[v2])
            if len(shared) >= 2:
                return True
    return False


def has_six_cycle(graph: TannerGraph) -> bool:
    """Direct scan for v0-c0-v1-c1-v2-c2 cycles anchored at shift-0 checks."""
    for i in range(3):
        c0 = graph.check_index(i, 0)
        members = graph.chk_adj[c0]
        for v0, v1 in combinations(members, 2):
            banned = {c0}
            v0_checks = set(graph.var_adj[v0]) - banned
            for c1 in graph.var_adj[v1]:
                if c1 == c0:
                    continue
                for v2 in graph.chk_adj[c1]:
                    if v2 == v0 or v2 == v1:
                        continue
                    if any(c2 in v0_checks and c2 != c1 for c2 in graph.var_adj[v2]):
                        return True
    return False


def to_alist(graph: TannerGraph) -> str:
    """Standard alist rendering of the parity-check matrix.

    Line 1: "nVN nCN"; line 2: max degrees; lines 3-4: per-node degrees;
    then 1-indexed neighbor lists (variable rows, then check rows).
    Degrees are uniform here, so no zero padding is ever needed.
    """
    n_var, n_chk = graph.num_variables, graph.num_checks
    lines = [f"{n_var} {n_chk}", f"3 {graph.n_cols}"]
    lines.append(" ".join(["3"] * n_var))
    lines.append(" ".join([str(graph.n_cols)] * n_chk))
    for neighbors in graph.var_adj:
        lines.append(" ".join(str(c + 1) for c in neighbors))
    for neighbors in graph.chk_adj:
        lines.append(" ".join(str(v + 1) for v in neighbors))
    return "\n".join(lines) + "\n"
