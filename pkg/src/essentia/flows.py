"""Minimum vertex separators with dual vertex-disjoint path systems.

Unit vertex capacities are modelled by splitting every vertex w into
w_in -> w_out with capacity one; arcs get effectively infinite capacity.
Max-flow / min-cut then gives a separator whose size equals the number
of internally vertex-disjoint paths returned (Menger equality), verified
on construction.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graphs import Digraph, Graph


class SeparatorUndefined(ValueError):
    """Raised when the arc (s, t) is present, so no separator exists."""


@dataclass(frozen=True)
class SeparatorResult:
    separator: frozenset[int]
    paths: tuple[tuple[int, ...], ...]  # s..t vertex sequences

    @property
    def size(self) -> int:
        return len(self.separator)


def _bfs_augment(cap: list[dict[int, int]], s: int, t: int) -> bool:
    prev = {s: -1}
    queue = deque([s])
    while queue:
        u = queue.popleft()
        if u == t:
            break
        for w, c in cap[u].items():
            if c > 0 and w not in prev:
                prev[w] = u
                queue.append(w)
    if t not in prev:
        return False
    x = t
    while x != s:
        p = prev[x]
        cap[p][x] -= 1
        cap[x][p] = cap[x].get(p, 0) + 1
        x = p
    return True


def min_vertex_separator(d: Digraph, s: int, t: int) -> SeparatorResult:
    """Minimum s-t vertex separator (excluding s, t) plus a maximum system
    of internally vertex-disjoint s->t paths of the same cardinality."""
    if s == t:
        raise ValueError("source and sink must differ")
    if d.has_arc(s, t):
        raise SeparatorUndefined(f"arc ({s}, {t}) present: separator undefined")
    n = d.n
    big = n + 1  # effectively infinite for unit-capacity flows

    def v_in(w: int) -> int:
        return 2 * w

    def v_out(w: int) -> int:
        return 2 * w + 1

    cap: list[dict[int, int]] = [dict() for _ in range(2 * n)]
    for w in range(n):
        cap[v_in(w)][v_out(w)] = 1
    for u, w in d.arcs():
        cap[v_out(u)][v_in(w)] = big
    source, sink = v_out(s), v_in(t)

    flow = 0
    while _bfs_augment(cap, source, sink):
        flow += 1
        if flow > n:
            raise AssertionError("flow exceeded vertex count")

    # Min cut: split arcs crossing the residual reachability boundary.
    reach = {source}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w, c in cap[u].items():
            if c > 0 and w not in reach:
                reach.add(w)
                queue.append(w)
    separator = frozenset(
        w for w in range(n) if v_in(w) in reach and v_out(w) not in reach
    )

    # Path decomposition: consume one unit of used split capacity per step.
    used: list[dict[int, int]] = [dict() for _ in range(2 * n)]
    for w in range(n):
        if cap[v_in(w)][v_out(w)] == 0:
            used[v_in(w)][v_out(w)] = 1
    for u, w in d.arcs():
        spent = big - cap[v_out(u)][v_in(w)]
        if spent > 0:
            used[v_out(u)][v_in(w)] = spent
    paths = []
    for _ in range(flow):
        path = [s]
        node = source
        while node != sink:
            nxt = next(x for x, c in used[node].items() if c > 0)
            used[node][nxt] -= 1
            if nxt % 2 == 1:  # leaving a split vertex: record it
                path.append(nxt // 2)
            node = nxt
        path.append(t)
        paths.append(tuple(path))

    result = SeparatorResult(separator, tuple(paths))
    _verify(d, s, t, result)
    return result


def min_vertex_separator_undirected(g: Graph, s: int, t: int) -> SeparatorResult:
    """Undirected variant: replace each edge with two antiparallel arcs."""
    arcs = []
    for u, v in g.edges():
        arcs.append((u, v))
        arcs.append((v, u))
    return min_vertex_separator(Digraph(g.n, arcs), s, t)


def _verify(d: Digraph, s: int, t: int, result: SeparatorResult) -> None:
    sep = result.separator
    if s in sep or t in sep:
        raise AssertionError("separator contains a terminal")
    if len(sep) != len(result.paths):
        raise AssertionError("Menger equality violated")
    seen_internal: set[int] = set()
    for path in result.paths:
        if path[0] != s or path[-1] != t:
            raise AssertionError("path endpoints wrong")
        for a, b in zip(path, path[1:]):
            if not d.has_arc(a, b):
                raise AssertionError(f"path uses missing arc ({a}, {b})")
        internal = set(path[1:-1])
        if len(internal) != len(path) - 2 or internal & seen_internal:
            raise AssertionError("paths not internally vertex-disjoint")
        seen_internal |= internal
    # The separator must disconnect s from t.
    reach = {s}
    queue = deque([s])
    while queue:
        u = queue.popleft()
        for w in d.successors(u):
            if w not in sep and w not in reach:
                reach.add(w)
                queue.append(w)
    if t in reach:
        raise AssertionError("separator does not disconnect the terminals")
