import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from mcnum.graph import Graph, complete_graph, cycle_graph, parse_graph6, path_graph

DATA_DIR = Path(__file__).resolve().parent.parent / "src" / "mcnum" / "data"


def corpus_lines(n: int) -> list[str]:
    return (DATA_DIR / f"connected_n{n}.g6").read_text().splitlines()


def corpus_graphs(max_n: int, min_n: int = 1) -> list[Graph]:
    out = []
    for n in range(min_n, max_n + 1):
        out.extend(parse_graph6(line) for line in corpus_lines(n))
    return out


@pytest.fixture(scope="session")
def graphs_n5() -> list[Graph]:
    return corpus_graphs(5)


@pytest.fixture(scope="session")
def graphs_n6() -> list[Graph]:
    return corpus_graphs(6)


@pytest.fixture(scope="session")
def graphs_n7() -> list[Graph]:
    return corpus_graphs(7)


@pytest.fixture(scope="session")
def named_graphs() -> dict[str, Graph]:
    return {
        "P3": path_graph(3),
        "P4": path_graph(4),
        "C4": cycle_graph(4),
        "C5": cycle_graph(5),
        "K4": complete_graph(4),
        "fan": Graph(1).join(path_graph(3)),
        "wheel": Graph(1).join(cycle_graph(4)),
        "K2vP3": complete_graph(2).join(path_graph(3)),
        "octahedron": Graph(2).join(cycle_graph(4)),
        "cube": Graph(8, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6),
                          (6, 7), (7, 4), (0, 4), (1, 5), (2, 6), (3, 7)]),
    }
