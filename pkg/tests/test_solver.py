import pytest

from mcnum.graph import Graph, complete_graph, cycle_graph, path_graph
from mcnum.solver import (MCColoring, NodeBudgetExceeded, SearchOptions,
                          SolverLimitError, mc_exact, mc_exact_unrestricted,
                          spanning_tree_coloring, verify_coloring)
from mcnum.structure import (DisconnectedGraphError, chromatic_number,
                             min_degree, vertex_connectivity)


def coloring(n, *classes):
    return MCColoring.from_lists(n, classes)


# -- verify_coloring ---------------------------------------------------------

def test_verify_single_class_path():
    g = path_graph(3)
    report = verify_coloring(g, coloring(3, [(0, 1), (1, 2)]))
    assert report.valid
    assert report.colors_used == 1
    assert report.waste == 1


def test_verify_uncovered_pair():
    g = path_graph(3)
    report = verify_coloring(g, coloring(3, [(0, 1)], [(1, 2)]))
    assert not report.valid
    assert report.failing_pair == (0, 2)
    assert report.failing_reason == "uncovered pair"


def test_verify_cycle_with_trivial_edge():
    g = cycle_graph(4)
    report = verify_coloring(g, coloring(4, [(0, 1), (1, 2), (2, 3)], [(0, 3)]))
    assert report.valid
    assert report.colors_used == 2
    assert report.waste == 2


def test_verify_not_a_partition():
    g = cycle_graph(4)
    missing = coloring(4, [(0, 1), (1, 2), (2, 3)])
    assert verify_coloring(g, missing).failing_reason == "not a partition"
    doubled = coloring(4, [(0, 1)], [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert verify_coloring(g, doubled).failing_reason == "not a partition"
    non_edge = coloring(4, [(0, 2)], [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert verify_coloring(g, non_edge).failing_reason == "not a partition"


def test_verify_disconnected_class():
    g = cycle_graph(4)
    report = verify_coloring(g, coloring(4, [(0, 1), (2, 3)], [(1, 2)], [(0, 3)]))
    assert not report.valid
    assert report.failing_reason == "class not connected"


def test_verify_wrong_vertex_count():
    with pytest.raises(ValueError):
        verify_coloring(path_graph(3), coloring(4, [(0, 1), (1, 2)]))


# -- spanning tree baseline -----------------------------------------------------

@pytest.mark.parametrize("g,colors", [
    (cycle_graph(4), 2),
    (complete_graph(4), 4),
    (path_graph(3), 1),
])
def test_spanning_tree_coloring(g, colors):
    c = spanning_tree_coloring(g)
    report = verify_coloring(g, c)
    assert report.valid
    assert report.colors_used == colors == g.m - g.n + 2


def test_spanning_tree_coloring_preconditions():
    with pytest.raises(DisconnectedGraphError):
        spanning_tree_coloring(Graph(4, [(0, 1), (2, 3)]))
    with pytest.raises(ValueError):
        spanning_tree_coloring(Graph(1))


# -- exact solver -------------------------------------------------------------------

@pytest.mark.parametrize("g,mc", [
    (path_graph(3), 1),
    (complete_graph(4), 6),
    (cycle_graph(4), 2),
    (cycle_graph(5), 2),
    (Graph(2).join(cycle_graph(4)), 9),
    (complete_graph(1), 0),
    (complete_graph(2), 1),
])
def test_mc_exact_values(g, mc):
    result = mc_exact(g)
    assert result.mc == mc
    report = verify_coloring(g, result.witness)
    assert report.valid and report.colors_used == mc


def test_mc_exact_requires_connected():
    with pytest.raises(DisconnectedGraphError):
        mc_exact(Graph(4, [(0, 1), (2, 3)]))


def test_mc_exact_node_budget():
    with pytest.raises(NodeBudgetExceeded):
        mc_exact(Graph(2).join(cycle_graph(4)), SearchOptions(node_budget=3))


def test_mc_exact_deterministic_nodes():
    g = Graph(2).join(cycle_graph(4))
    first = mc_exact(g)
    second = mc_exact(g)
    assert first.nodes_explored == second.nodes_explored
    assert first.witness == second.witness


# -- unrestricted oracle -------------------------------------------------------------

@pytest.mark.parametrize("g,mc", [
    (cycle_graph(4), 2),
    (cycle_graph(5), 2),
    (complete_graph(4), 6),
])
def test_unrestricted_values(g, mc):
    assert mc_exact_unrestricted(g).mc == mc


def test_unrestricted_edge_cap():
    with pytest.raises(SolverLimitError):
        mc_exact_unrestricted(complete_graph(6))


def test_unrestricted_agrees_on_n5(graphs_n5):
    for g in graphs_n5:
        assert mc_exact_unrestricted(g).mc == mc_exact(g).mc


# -- corpus invariants at unit scale ---------------------------------------------------

def test_bounds_over_n5(graphs_n5):
    for g in graphs_n5:
        mc = mc_exact(g).mc
        n, m = g.n, g.m
        if n >= 2:
            assert m - n + 2 <= mc <= m - n + chromatic_number(g)
            if not g.is_complete():
                assert mc <= m - n + vertex_connectivity(g) + 1
            assert mc <= m - n + min_degree(g) + 1


def test_witnesses_over_n5(graphs_n5):
    for g in graphs_n5:
        result = mc_exact(g)
        report = verify_coloring(g, result.witness)
        assert report.valid and report.colors_used == result.mc
