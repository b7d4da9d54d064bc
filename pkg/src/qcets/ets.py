"""Exact enumeration of small elementary trapping sets in lifted graphs.

An (a, b) elementary trapping set is a variable-node subset whose induced
check nodes all have degree 1 or 2, with b the number of degree-1 checks;
its VN graph has the variables as vertices and one edge per degree-2
check.  Enumeration scope is connected VN graphs: disconnected sets are
unions of smaller ones and would double-count classes.

The enumerator grows connected subsets by canonical extension (each set is
generated exactly once from its minimum vertex), prunes any branch where a
check would reach degree 3 or where even 3 more pairings per step cannot
bring b within bound, and anchors only at shift-0 variable nodes, mapping
the found representatives through the shift automorphism afterwards.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations

from .tanner import TannerGraph

_DEFAULT_STEP_LIMIT = 10**9
_STEP_LIMIT_ENV = "QCETS_ETS_STEP_LIMIT"


class EnumerationLimitError(RuntimeError):
    """Raised when the extension-step ceiling is exceeded."""


def _step_limit(max_steps: int | None) -> int:
    if max_steps is not None:
        return max_steps
    env = os.environ.get(_STEP_LIMIT_ENV)
    return int(env) if env else _DEFAULT_STEP_LIMIT


@dataclass(frozen=True)
class EtsRecord:
    """One elementary trapping set of the lifted graph."""

    variables: tuple[int, ...]
    satisfied_checks: tuple[int, ...]
    unsatisfied_checks: tuple[int, ...]
    vn_edges: tuple[tuple[int, int, int], ...]  # (variable, variable, check)

    @property
    def a(self) -> int:
        return len(self.variables)

    @property
    def b(self) -> int:
        return len(self.unsatisfied_checks)


def _canonical_orbit_key(variables, degree: int) -> tuple[int, ...]:
    """Lexicographically least shift image of a variable set."""
    best = None
    for shift in range(degree):
        image = tuple(
            sorted((v - v % degree) + (v % degree + shift) % degree for v in variables)
        )
        if best is None or image < best:
            best = image
    return best


def _make_record(graph: TannerGraph, variables: tuple[int, ...]) -> EtsRecord:
    tally: dict[int, list[int]] = {}
    for v in variables:
        for c in graph.var_adj[v]:
            tally.setdefault(c, []).append(v)
    satisfied = []
    unsatisfied = []
    edges = []
    for c in sorted(tally):
        members = tally[c]
        if len(members) == 1:
            unsatisfied.append(c)
        elif len(members) == 2:
            satisfied.append(c)
            x, y = sorted(members)
            edges.append((x, y, c))
        else:
            raise ValueError("set is not elementary: a check has degree > 2")
    return EtsRecord(
        tuple(variables), tuple(satisfied), tuple(unsatisfied), tuple(sorted(edges))
    )


def enumerate_ets(
    graph: TannerGraph,
    a_max: int,
    b_max: int,
    *,
    max_steps: int | None = None,
) -> list[EtsRecord]:
    """All connected-VN-graph elementary trapping sets with a <= a_max,
    b <= b_max, each variable set exactly once, sorted by (a, b, set)."""
    if a_max < 1:
        return []
    degree = graph.lifting_degree
    n_var = graph.num_variables
    var_checks = graph.var_adj
    check_vars = graph.chk_adj
    limit = _step_limit(max_steps)

    check_deg = bytearray(graph.num_checks)
    visited = bytearray(n_var)
    orbits: dict[tuple[int, ...], tuple[int, ...]] = {}
    members: list[int] = []
    steps = 0

    def record() -> None:
        rep = tuple(sorted(members))
        orbits.setdefault(_canonical_orbit_key(rep, degree), rep)

    def extend(anchor: int, ext: list[int], b_cur: int) -> None:
        nonlocal steps
        a_new = len(members) + 1
        slack = b_max + 3 * (a_max - a_new)
        for i, w in enumerate(ext):
            steps += 1
            if steps > limit:
                raise EnumerationLimitError(
                    f"trapping-set enumeration exceeded {limit} extension steps"
                )
            wc = var_checks[w]
            hits = 0
            blocked = False
            for c in wc:
                d = check_deg[c]
                if d == 2:
                    blocked = True
                    break
                hits += d
            if blocked:
                continue
            b_new = b_cur + 3 - 2 * hits
            if b_new <= b_max:
                members.append(w)
                record()
                members.pop()
            if a_new == a_max or b_new > slack:
                continue
            # descend
            members.append(w)
            for c in wc:
                check_deg[c] += 1
            newly_seen: list[int] = []
            new_ext = ext[i + 1 :]
            for c in wc:
                if check_deg[c] != 1:
                    continue  # co-members of older checks are already seen
                for u in check_vars[c]:
                    if u <= anchor or visited[u]:
                        continue
                    visited[u] = 1
                    newly_seen.append(u)
                    if all(check_deg[cc] < 2 for cc in var_checks[u]):
                        new_ext.append(u)
            extend(anchor, new_ext, b_new)
            for u in newly_seen:
                visited[u] = 0
            for c in wc:
                check_deg[c] -= 1
            members.pop()

    for j in range(graph.n_cols):
        anchor = j * degree
        members.append(anchor)
        if 3 <= b_max:
            record()
        if a_max > 1:
            visited[anchor] = 1
            for c in var_checks[anchor]:
                check_deg[c] = 1
            ext: list[int] = []
            seeded: list[int] = []
            for c in var_checks[anchor]:
                for u in check_vars[c]:
                    if u <= anchor or visited[u]:
                        continue
                    visited[u] = 1
                    seeded.append(u)
                    if all(check_deg[cc] < 2 for cc in var_checks[u]):
                        ext.append(u)
            extend(anchor, ext, 3)
            for u in seeded:
                visited[u] = 0
            for c in var_checks[anchor]:
                check_deg[c] = 0
            visited[anchor] = 0
        members.pop()

    final: set[tuple[int, ...]] = set()
    for rep in orbits.values():
        for shift in range(degree):
            final.add(
                tuple(
                    sorted((v - v % degree) + (v % degree + shift) % degree for v in rep)
                )
            )
    records = [_make_record(graph, variables) for variables in sorted(final)]
    records.sort(key=lambda r: (r.a, r.b, r.variables))
    return records


def exhaustive_subset_oracle(
    graph: TannerGraph, a_max: int, b_max: int
) -> dict[tuple[int, int], int]:
    """Brute-force class counts over all variable subsets; tiny graphs only.

    Used in tests to validate ``enumerate_ets``; classifies every subset of
    size 1..a_max by the same rules (elementary, b <= b_max, connected VN
    graph).
    """
    n_var = graph.num_variables
    if n_var > 24:
        raise ValueError(f"oracle is limited to 24 variable nodes, got {n_var}")
    counts: dict[tuple[int, int], int] = {}
    for a in range(1, min(a_max, n_var) + 1):
        for subset in combinations(range(n_var), a):
            tally: dict[int, list[int]] = {}
            elementary = True
            for v in subset:
                for c in graph.var_adj[v]:
                    group = tally.setdefault(c, [])
                    group.append(v)
                    if len(group) > 2:
                        elementary = False
                        break
                if not elementary:
                    break
            if not elementary:
                continue
            b = sum(1 for group in tally.values() if len(group) == 1)
            if b > b_max:
                continue
            if not _vn_connected(subset, tally):
                continue
            key = (a, b)
            counts[key] = counts.get(key, 0) + 1
    return counts


def _vn_connected(subset, tally) -> bool:
    neighbors: dict[int, set[int]] = {v: set() for v in subset}
    for group in tally.values():
        if len(group) == 2:
            x, y = group
            neighbors[x].add(y)
            neighbors[y].add(x)
    seen = {subset[0]}
    stack = [subset[0]]
    while stack:
        for u in neighbors[stack.pop()]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == len(subset)


def ets_class_counts(records) -> dict[tuple[int, int], int]:
    counts: dict[tuple[int, int], int] = {}
    for r in records:
        key = (r.a, r.b)
        counts[key] = counts.get(key, 0) + 1
    return counts


def classify_harmful(records, rule: str = "b/a<1"):
    """Keep the error-floor-dominant records, those with b < a."""
    if rule != "b/a<1":
        raise ValueError(f"unknown harmfulness rule: {rule!r}")
    return [r for r in records if r.b < r.a]
