"""Graph construction, deletion remaps, and the file format."""
from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import cycle_graph, random_digraph, random_graph
from essentia.graphs import (
    Digraph,
    Graph,
    GraphError,
    GraphFormatError,
    delete_vertices,
    parse_graph,
    serialize_graph,
)


def test_construction_invariants():
    g = Graph(3, [(0, 1), (1, 2), (0, 2)])
    assert g.m == 3
    assert g.neighbors(1) == (0, 2)
    for u in range(g.n):
        for v in g.neighbors(u):
            assert u in g.neighbors(v)
            assert u != v


def test_rejects_bad_edges():
    with pytest.raises(GraphError):
        Graph(2, [(0, 0)])
    with pytest.raises(GraphError):
        Graph(2, [(0, 2)])
    with pytest.raises(GraphError):
        Graph(2, [(0, 1), (1, 0)])
    with pytest.raises(GraphError):
        Digraph(2, [(1, 1)])
    with pytest.raises(GraphError):
        Digraph(2, [(0, 1), (0, 1)])


def test_digraph_allows_antiparallel():
    d = Digraph(2, [(0, 1), (1, 0)])
    assert d.m == 2
    assert d.has_arc(0, 1) and d.has_arc(1, 0)


def test_delete_from_triangle():
    g, remap = delete_vertices(cycle_graph(3), [0])
    assert g == Graph(2, [(0, 1)])
    assert remap == {1: 0, 2: 1}


def test_delete_nothing_is_identity():
    g = cycle_graph(5)
    h, remap = delete_vertices(g, [])
    assert h == g
    assert remap == {v: v for v in range(5)}


def test_delete_c5_two_vertices_gives_p3():
    # C5 minus {0, 2}: vertices 1, 3, 4 keep edges 3-4 only... plus none at 1.
    h, remap = delete_vertices(cycle_graph(5), [0, 2])
    assert h.n == 3
    assert sorted(h.edges()) == [(remap[3], remap[4])]


def test_delete_out_of_range():
    with pytest.raises(GraphError):
        delete_vertices(cycle_graph(3), [7])


@given(st.integers(0, 10**6))
@settings(max_examples=60, deadline=None)
def test_delete_composition(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 9)
    g = random_graph(rng, n, 0.5)
    xs = {v for v in range(n) if rng.random() < 0.3}
    ys = {v for v in range(n) if rng.random() < 0.3} - xs
    g1, r1 = delete_vertices(g, xs)
    g2, r2 = delete_vertices(g1, [r1[v] for v in ys])
    g12, r12 = delete_vertices(g, xs | ys)
    assert g2 == g12
    for old, new in r12.items():
        assert r2[r1[old]] == new


def test_parse_triangle():
    text = "p ud 3 3\ne 1 2\ne 2 3\ne 1 3\n"
    g = parse_graph(text)
    assert g == cycle_graph(3)


def test_parse_directed():
    d = parse_graph("p di 3 2\nc a comment\ne 1 2\ne 3 1\n")
    assert isinstance(d, Digraph)
    assert sorted(d.arcs()) == [(0, 1), (2, 0)]


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("p ud 2 1\ne 1 1\n", "self-loop"),
        ("p ud 2 2\ne 1 2\ne 2 1\n", "duplicate"),
        ("p ud 2 1\ne 1 3\n", "out of range"),
        ("p xx 2 1\ne 1 2\n", "malformed header"),
        ("e 1 2\n", "before header"),
        ("p ud 2 2\ne 1 2\n", "header declares"),
        ("", "missing header"),
        ("p ud 2 1\nq 1 2\n", "unknown line"),
    ],
)
def test_parse_errors(text, fragment):
    with pytest.raises(GraphFormatError) as exc:
        parse_graph(text)
    assert fragment in str(exc.value)


def test_parse_error_reports_line_number():
    with pytest.raises(GraphFormatError) as exc:
        parse_graph("p ud 3 2\ne 1 2\ne 3 3\n")
    assert exc.value.line_no == 3


@given(st.integers(0, 10**6))
@settings(max_examples=60, deadline=None)
def test_roundtrip(seed):
    rng = random.Random(seed)
    n = rng.randint(0, 9)
    g = random_graph(rng, n, 0.4) if rng.random() < 0.5 else random_digraph(rng, n, 0.3)
    text = serialize_graph(g)
    assert parse_graph(text) == g
    # serialize(parse(t)) is a fixpoint: canonical text round-trips bit-exact.
    assert serialize_graph(parse_graph(text)) == text
