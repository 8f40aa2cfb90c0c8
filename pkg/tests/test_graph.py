import pytest
from hypothesis import given, settings, strategies as st

from mcnum.graph import (Graph, Graph6Error, GraphTooLargeError,
                         complete_bipartite, complete_graph, cycle_graph,
                         emit_graph6, has_minor, parse_graph6, path_graph,
                         shape, star_graph)


@st.composite
def graphs(draw, max_n=10):
    n = draw(st.integers(min_value=1, max_value=max_n))
    nbits = n * (n - 1) // 2
    mask = draw(st.integers(min_value=0, max_value=(1 << nbits) - 1))
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if mask >> idx & 1:
                edges.append((i, j))
            idx += 1
    return Graph(n, edges)


# -- graph6 -------------------------------------------------------------------

@pytest.mark.parametrize("text,n,edges", [
    ("A_", 2, [(0, 1)]),
    ("Bw", 3, [(0, 1), (0, 2), (1, 2)]),
    ("Bg", 3, [(0, 1), (1, 2)]),
    ("C~", 4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
])
def test_parse_graph6_examples(text, n, edges):
    g = parse_graph6(text)
    assert g.n == n
    assert g.edges() == edges


@pytest.mark.parametrize("g,expect", [
    (complete_graph(2), "A_"),
    (complete_graph(4), "C~"),
    (path_graph(3), "Bg"),
])
def test_emit_graph6_examples(g, expect):
    assert emit_graph6(g) == expect


def test_parse_graph6_header_and_bytes():
    assert parse_graph6(">>graph6<<A_") == complete_graph(2)
    assert parse_graph6(b"Bw") == complete_graph(3)


def test_parse_graph6_k5_text():
    assert parse_graph6("D~{") == complete_graph(5)


@pytest.mark.parametrize("bad,offset", [
    ("", 0),          # empty
    ("~??", 0),       # n >= 63
    ("B", 1),         # truncated bit vector
    ("A_x", 2),       # trailing junk
    (" ", 0),         # only whitespace
])
def test_parse_graph6_malformed(bad, offset):
    with pytest.raises(Graph6Error) as err:
        parse_graph6(bad)
    assert err.value.offset == offset


def test_parse_graph6_bad_length_byte():
    with pytest.raises(Graph6Error):
        parse_graph6(chr(40))


def test_emit_graph6_too_large():
    with pytest.raises(GraphTooLargeError):
        emit_graph6(Graph(63))


@settings(max_examples=200)
@given(graphs(max_n=12))
def test_graph6_round_trip(g):
    assert parse_graph6(emit_graph6(g)) == g


# -- construction and basic ops -----------------------------------------------

def test_graph_rejects_bad_edges():
    with pytest.raises(ValueError):
        Graph(3, [(0, 3)])
    with pytest.raises(ValueError):
        Graph(3, [(1, 1)])


def test_complement_examples():
    assert cycle_graph(4).complement().edges() == [(0, 2), (1, 3)]
    assert complete_graph(4).complement().m == 0
    assert path_graph(3).complement().edges() == [(0, 2)]


@settings(max_examples=150)
@given(graphs())
def test_complement_involution(g):
    assert g.complement().complement() == g


def test_join_examples():
    fan = Graph(1).join(path_graph(3))
    assert (fan.n, fan.m) == (4, 5)
    assert complete_graph(2).join(Graph(2, [(0, 1)])) == complete_graph(4)
    octa = Graph(2).join(cycle_graph(4))
    assert (octa.n, octa.m) == (6, 12)
    assert all(not octa.has_edge(0, 1) for _ in [0])


@settings(max_examples=100)
@given(graphs(max_n=6), graphs(max_n=6))
def test_join_edge_count(g, h):
    assert g.join(h).m == g.m + h.m + g.n * h.n


def test_contract_examples():
    assert cycle_graph(4).contract_edge(0, 1) == complete_graph(3)
    assert complete_graph(4).contract_edge(1, 3) == complete_graph(3)
    assert path_graph(3).contract_edge(0, 1) == complete_graph(2)


def test_contract_invalid_edge():
    with pytest.raises(ValueError):
        cycle_graph(4).contract_edge(0, 2)


@settings(max_examples=150)
@given(graphs())
def test_contract_shrinks(g):
    edges = g.edges()
    if not edges:
        return
    u, v = edges[0]
    h = g.contract_edge(u, v)
    assert h.n == g.n - 1
    assert h.m <= g.m - 1


# -- shape ---------------------------------------------------------------------

def test_shape_examples():
    s = shape(path_graph(3))
    assert s.is_path and s.is_linear_forest and not s.is_cycle
    s = shape(cycle_graph(4))
    assert s.is_cycle and not s.is_path
    p3_plus_isolated = Graph(4, [(0, 1), (1, 2)])
    s = shape(p3_plus_isolated)
    assert s.is_linear_forest and s.component_count == 2 and not s.is_path
    assert shape(complete_graph(4)).is_complete
    assert shape(star_graph(3)).degree_sequence == (3, 1, 1, 1)


@settings(max_examples=200)
@given(graphs())
def test_shape_invariants(g):
    s = shape(g)
    if s.is_path:
        assert s.is_linear_forest
    if s.is_cycle:
        assert s.component_count == 1
        assert all(d == 2 for d in s.degree_sequence)
    acyclic = g.m == g.n - s.component_count
    assert s.is_linear_forest == (acyclic and max(s.degree_sequence) <= 2
                                  if g.n else True)


# -- minors ----------------------------------------------------------------------

def test_has_minor_examples():
    wheel = Graph(1).join(cycle_graph(4))
    assert has_minor(wheel, "K4")
    assert not has_minor(cycle_graph(4), "K4")
    assert has_minor(complete_graph(5), "K4")
    assert not has_minor(complete_bipartite(2, 3), "K4")


def test_k23_minor():
    theta = Graph(5, [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)])
    assert has_minor(theta, "K2,3")
    assert not has_minor(cycle_graph(4), "K2,3")
    assert has_minor(complete_bipartite(3, 3), "K2,3")


def test_k5_and_k33_minors():
    petersen = Graph(10, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                          (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
                          (0, 5), (1, 6), (2, 7), (3, 8), (4, 9)])
    assert has_minor(petersen, "K5")
    assert has_minor(petersen, "K3,3")
    assert not has_minor(complete_graph(4), "K5")
    assert has_minor(complete_graph(6), "K3,3")


def test_minor_of_subdivision():
    # K4 with every edge subdivided once still has a K4 minor
    base = complete_graph(4)
    edges = []
    extra = 4
    for u, v in base.edges():
        edges.extend([(u, extra), (extra, v)])
        extra += 1
    subdiv = Graph(extra, edges)
    assert has_minor(subdiv, "K4")
    assert not has_minor(subdiv, "K5")


def test_minor_rejects_unknown_target():
    with pytest.raises(ValueError):
        has_minor(complete_graph(3), "K6")


@settings(max_examples=60)
@given(graphs(max_n=7), st.sampled_from(["K4", "K2,3"]))
def test_minor_monotone_under_supergraph(g, target):
    full = complete_graph(g.n)
    if has_minor(g, target):
        assert has_minor(full, target)
