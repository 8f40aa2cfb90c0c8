import networkx as nx
import pytest

from mcnum.graph import (Graph, complete_bipartite, complete_graph,
                         complete_multipartite, cycle_graph, emit_graph6,
                         has_minor, path_graph, star_graph)
from mcnum.structure import (DisconnectedGraphError, EmptyGraphError,
                             chromatic_number, cut_vertices, diameter,
                             is_outerplanar, is_outerplanar_by_minors,
                             is_planar, max_degree, min_degree,
                             minimum_cut_set, vertex_connectivity)

from bruteforce import brute_chromatic, brute_connectivity, nx_planar, to_nx


ICOSAHEDRON = Graph(12, [
    (0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (2, 3), (3, 4), (4, 5),
    (5, 1), (6, 7), (7, 8), (8, 9), (9, 10), (10, 6), (11, 6), (11, 7),
    (11, 8), (11, 9), (11, 10), (1, 6), (1, 7), (2, 7), (2, 8), (3, 8),
    (3, 9), (4, 9), (4, 10), (5, 10), (5, 6)])


# -- connectivity -----------------------------------------------------------------

@pytest.mark.parametrize("g,kappa", [
    (cycle_graph(4), 2),
    (complete_graph(4), 3),
    (star_graph(3), 1),
    (Graph(2).join(cycle_graph(4)), 4),
    (complete_graph(1), 0),
    (Graph(4, [(0, 1), (2, 3)]), 0),
])
def test_vertex_connectivity_examples(g, kappa):
    assert vertex_connectivity(g) == kappa


def test_vertex_connectivity_empty_graph():
    with pytest.raises(EmptyGraphError):
        vertex_connectivity(Graph(0))


def test_vertex_connectivity_matches_bruteforce(graphs_n6):
    for g in graphs_n6:
        assert vertex_connectivity(g) == brute_connectivity(g), emit_graph6(g)


def test_vertex_connectivity_matches_networkx(graphs_n6):
    for g in graphs_n6:
        if g.n >= 2:
            assert vertex_connectivity(g) == nx.node_connectivity(to_nx(g))


def test_minimum_cut_set(graphs_n6):
    from itertools import combinations
    for g in graphs_n6:
        if not g.is_connected() or g.is_complete():
            continue
        cut = minimum_cut_set(g)
        rest = [v for v in range(g.n) if v not in cut.vertices]
        assert len(g.induced(rest).component_masks()) > 1
        assert cut.order == vertex_connectivity(g)
        for smaller in combinations(range(g.n), cut.order - 1):
            keep = [v for v in range(g.n) if v not in smaller]
            assert len(g.induced(keep).component_masks()) == 1


@pytest.mark.parametrize("g,cuts", [
    (path_graph(3), {1}),
    (cycle_graph(4), set()),
    (Graph(1).join(path_graph(3)), set()),
])
def test_cut_vertices_examples(g, cuts):
    assert cut_vertices(g) == cuts


def test_cut_vertices_requires_connected():
    with pytest.raises(DisconnectedGraphError):
        cut_vertices(Graph(4, [(0, 1), (2, 3)]))


def test_connectivity_at_most_min_degree(graphs_n6):
    for g in graphs_n6:
        if g.n >= 2:
            assert vertex_connectivity(g) <= min_degree(g)


# -- planarity -----------------------------------------------------------------------

@pytest.mark.parametrize("g,planar", [
    (complete_graph(4), True),
    (complete_graph(5), False),
    (complete_bipartite(3, 3), False),
    (Graph(2).join(cycle_graph(4)), True),
    (complete_graph(6), False),
])
def test_is_planar_examples(g, planar):
    assert is_planar(g) == planar


def test_is_planar_k5_from_graph6():
    from mcnum.graph import parse_graph6
    assert not is_planar(parse_graph6("D~{"))


def test_icosahedron_planar_and_5_connected():
    assert sorted(ICOSAHEDRON.degrees()) == [5] * 12
    assert is_planar(ICOSAHEDRON)
    assert vertex_connectivity(ICOSAHEDRON) == 5


def test_is_planar_matches_networkx(graphs_n6):
    for g in graphs_n6:
        assert is_planar(g) == nx_planar(g), emit_graph6(g)


def test_euler_bound(graphs_n6):
    for g in graphs_n6:
        if g.n >= 3 and is_planar(g):
            assert g.m <= 3 * g.n - 6


# -- outerplanarity --------------------------------------------------------------------

@pytest.mark.parametrize("g,outer", [
    (cycle_graph(4), True),
    (complete_graph(4), False),
    (complete_bipartite(2, 3), False),
    (Graph(1).join(path_graph(3)), True),
])
def test_is_outerplanar_examples(g, outer):
    assert is_outerplanar(g) == outer


def test_outerplanar_formulations_agree(graphs_n6):
    for g in graphs_n6:
        apex_route = is_outerplanar(g)
        minor_route = is_outerplanar_by_minors(g)
        assert apex_route == minor_route, emit_graph6(g)
        assert minor_route == (not has_minor(g, "K4")
                               and not has_minor(g, "K2,3"))
        if apex_route:
            assert is_planar(g)


# -- chromatic number ---------------------------------------------------------------------

@pytest.mark.parametrize("g,chi", [
    (complete_graph(4), 4),
    (cycle_graph(5), 3),
    (Graph(8, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4),
               (0, 4), (1, 5), (2, 6), (3, 7)]), 2),
    (complete_multipartite(3, 3, 3), 3),
])
def test_chromatic_examples(g, chi):
    assert chromatic_number(g) == chi


def test_chromatic_matches_bruteforce(graphs_n5):
    for g in graphs_n5:
        assert chromatic_number(g) == brute_chromatic(g), emit_graph6(g)


def test_chromatic_at_most_max_degree_plus_one(graphs_n6):
    for g in graphs_n6:
        assert chromatic_number(g) <= max_degree(g) + 1 if g.m else True


# -- diameter ---------------------------------------------------------------------------------

@pytest.mark.parametrize("g,d", [
    (complete_graph(4), 1),
    (cycle_graph(5), 2),
    (path_graph(4), 3),
])
def test_diameter_examples(g, d):
    assert diameter(g) == d


def test_diameter_requires_connected():
    with pytest.raises(DisconnectedGraphError):
        diameter(Graph(3, [(0, 1)]))
