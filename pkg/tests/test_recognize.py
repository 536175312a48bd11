"""Recognizers vs brute force on exhaustive small corpora."""
from __future__ import annotations

import random
from itertools import combinations

import pytest

from conftest import (
    complete_graph,
    cycle_graph,
    path_graph,
    random_digraph,
    random_graph,
)
from essentia.graphs import Digraph, Graph
from essentia.recognize import (
    is_acyclic_directed,
    is_acyclic_undirected,
    is_bipartite,
    is_chordal,
    is_odd_dicycle_free,
    shortest_cycle,
    shortest_dicycle,
    shortest_hole,
    shortest_odd_cycle,
    shortest_odd_dicycle,
)


def assert_cycle(g: Graph, cycle, odd=False, min_len=3):
    assert len(cycle) >= min_len
    assert len(set(cycle)) == len(cycle)
    if odd:
        assert len(cycle) % 2 == 1
    for i, u in enumerate(cycle):
        assert g.has_edge(u, cycle[(i + 1) % len(cycle)])


def assert_dicycle(d: Digraph, cycle, odd=False):
    assert len(set(cycle)) == len(cycle) >= 2
    if odd:
        assert len(cycle) % 2 == 1
    for i, u in enumerate(cycle):
        assert d.has_arc(u, cycle[(i + 1) % len(cycle)])


def brute_is_chordal(g: Graph) -> bool:
    """No induced cycle of length >= 4, by direct subset checking."""
    for k in range(4, g.n + 1):
        for sub in combinations(range(g.n), k):
            inside = set(sub)
            degs = [sum(1 for w in g.neighbors(v) if w in inside) for v in sub]
            if any(d != 2 for d in degs):
                continue
            # Connected 2-regular induced subgraph == induced cycle.
            seen = {sub[0]}
            stack = [sub[0]]
            while stack:
                x = stack.pop()
                for w in g.neighbors(x):
                    if w in inside and w not in seen:
                        seen.add(w)
                        stack.append(w)
            if len(seen) == k:
                return False
    return True


def test_bipartite_basic():
    ok, coloring = is_bipartite(cycle_graph(4))
    assert ok
    ok, witness = is_bipartite(cycle_graph(5))
    assert not ok and len(witness) == 5
    ok, _ = is_bipartite(Graph(0, []))
    assert ok


@pytest.mark.parametrize("seed", range(80))
def test_bipartite_random(seed):
    rng = random.Random(seed)
    g = random_graph(rng, rng.randint(1, 9), rng.choice([0.2, 0.4, 0.7]))
    ok, payload = is_bipartite(g)
    if ok:
        assert all(payload[u] != payload[v] for u, v in g.edges())
    else:
        assert_cycle(g, payload, odd=True)


def test_acyclic_undirected():
    ok, _ = is_acyclic_undirected(path_graph(4))
    assert ok
    two_trees = Graph(5, [(0, 1), (2, 3), (3, 4)])
    assert is_acyclic_undirected(two_trees)[0]
    ok, cycle = is_acyclic_undirected(cycle_graph(3))
    assert not ok
    assert_cycle(cycle_graph(3), cycle)


def test_acyclic_directed():
    d = Digraph(3, [(0, 1), (1, 2)])
    ok, topo = is_acyclic_directed(d)
    assert ok and len(topo) == 3
    pos = {v: i for i, v in enumerate(topo)}
    assert all(pos[u] < pos[v] for u, v in d.arcs())
    tri = Digraph(3, [(0, 1), (1, 2), (2, 0)])
    ok, cycle = is_acyclic_directed(tri)
    assert not ok
    assert_dicycle(tri, cycle)
    assert is_acyclic_directed(Digraph(1, []))[0]


@pytest.mark.parametrize("seed", range(60))
def test_acyclic_random(seed):
    rng = random.Random(300 + seed)
    g = random_graph(rng, rng.randint(1, 9), 0.3)
    ok, cycle = is_acyclic_undirected(g)
    # A graph is a forest iff m == n - #components.
    assert ok == (g.m == g.n - sum(1 for _ in _components(g)))
    if not ok:
        assert_cycle(g, cycle)
    d = random_digraph(rng, rng.randint(1, 8), 0.3)
    ok, payload = is_acyclic_directed(d)
    if not ok:
        assert_dicycle(d, payload)
    else:
        pos = {v: i for i, v in enumerate(payload)}
        assert all(pos[u] < pos[v] for u, v in d.arcs())


def _components(g: Graph):
    seen = set()
    for root in range(g.n):
        if root in seen:
            continue
        comp = {root}
        stack = [root]
        while stack:
            x = stack.pop()
            for w in g.neighbors(x):
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        yield comp


def verify_peo(g: Graph, elim) -> bool:
    position = {v: i for i, v in enumerate(elim)}
    for v in elim:
        later = [u for u in g.neighbors(v) if position[u] > position[v]]
        for a_i in range(len(later)):
            for b_i in range(a_i + 1, len(later)):
                if not g.has_edge(later[a_i], later[b_i]):
                    return False
    return True


def test_chordal_basic():
    ok, hole = is_chordal(cycle_graph(4))
    assert not ok and sorted(hole) == [0, 1, 2, 3]
    ok, peo = is_chordal(path_graph(5))
    assert ok and verify_peo(path_graph(5), peo)
    assert is_chordal(complete_graph(5))[0]


def test_chordal_c5_plus_chord():
    # C5 plus one chord leaves exactly one hole: the remaining C4.
    g = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])
    ok, hole = is_chordal(g)
    assert not ok
    assert sorted(hole) == [0, 2, 3, 4]


@pytest.mark.parametrize("seed", range(500))
def test_chordal_vs_brute(seed):
    rng = random.Random(7000 + seed)
    g = random_graph(rng, rng.randint(1, 7), rng.choice([0.25, 0.5, 0.75]))
    ok, payload = is_chordal(g)
    assert ok == brute_is_chordal(g)
    if ok:
        assert verify_peo(g, payload)
    else:
        assert len(payload) >= 4
        assert_cycle(g, payload, min_len=4)
        # Chordless: no edges besides the cycle edges.
        for i, u in enumerate(payload):
            for j in range(i + 2, len(payload)):
                if (i, j) != (0, len(payload) - 1):
                    assert not g.has_edge(u, payload[j])


def test_odd_dicycle_free():
    two_cycle = Digraph(2, [(0, 1), (1, 0)])
    assert is_odd_dicycle_free(two_cycle)[0]
    tri = Digraph(3, [(0, 1), (1, 2), (2, 0)])
    ok, cycle = is_odd_dicycle_free(tri)
    assert not ok
    assert_dicycle(tri, cycle, odd=True)


@pytest.mark.parametrize("seed", range(60))
def test_odd_dicycle_vs_brute(seed):
    rng = random.Random(500 + seed)
    d = random_digraph(rng, rng.randint(1, 7), rng.choice([0.2, 0.35]))
    ok, payload = is_odd_dicycle_free(d)
    assert ok == (brute_shortest_odd_dicycle_len(d) is None)
    if not ok:
        assert_dicycle(d, payload, odd=True)


def brute_shortest_odd_dicycle_len(d: Digraph):
    best = None
    for k in range(2, d.n + 1):
        if k % 2 == 0:
            continue
        from itertools import permutations

        for perm in permutations(range(d.n), k):
            if perm[0] != min(perm):
                continue
            if all(d.has_arc(perm[i], perm[(i + 1) % k]) for i in range(k)):
                best = k
                return best
    return best


def test_shortest_structures():
    g = cycle_graph(5)
    assert len(shortest_cycle(g)) == 5
    assert shortest_cycle(path_graph(4)) is None
    assert len(shortest_odd_cycle(g)) == 5
    assert shortest_odd_cycle(cycle_graph(6)) is None
    assert len(shortest_hole(cycle_graph(4))) == 4
    assert shortest_hole(complete_graph(4)) is None
    d = Digraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert len(shortest_dicycle(d)) == 4
    assert shortest_odd_dicycle(d) is None


@pytest.mark.parametrize("seed", range(60))
def test_shortest_structures_random(seed):
    rng = random.Random(900 + seed)
    g = random_graph(rng, rng.randint(1, 8), 0.4)
    c = shortest_cycle(g)
    if c is None:
        assert is_acyclic_undirected(g)[0]
    else:
        assert_cycle(g, c)
        assert len(c) == brute_girth(g)
    oc = shortest_odd_cycle(g)
    if oc is None:
        assert is_bipartite(g)[0]
    else:
        assert_cycle(g, oc, odd=True)
        assert len(oc) == brute_girth(g, odd=True)
    h = shortest_hole(g)
    if h is None:
        assert brute_is_chordal(g)
    else:
        assert len(h) == brute_shortest_hole_len(g)


def brute_girth(g: Graph, odd=False):
    from itertools import permutations

    best = None
    for k in range(3, g.n + 1):
        if odd and k % 2 == 0:
            continue
        for perm in permutations(range(g.n), k):
            if perm[0] != min(perm) or perm[1] > perm[-1]:
                continue
            if all(g.has_edge(perm[i], perm[(i + 1) % k]) for i in range(k)):
                return k
    return best


def brute_shortest_hole_len(g: Graph):
    from itertools import permutations

    for k in range(4, g.n + 1):
        for perm in permutations(range(g.n), k):
            if perm[0] != min(perm) or perm[1] > perm[-1]:
                continue
            if not all(g.has_edge(perm[i], perm[(i + 1) % k]) for i in range(k)):
                continue
            chordless = all(
                not g.has_edge(perm[i], perm[j])
                for i in range(k)
                for j in range(i + 2, k)
                if (i, j) != (0, k - 1)
            )
            if chordless:
                return k
    return None
