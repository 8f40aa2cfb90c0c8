#!/usr/bin/env python3
"""Generate the connected-graph corpora (graph6, one graph per line).

Builds all graphs on n <= 7 vertices up to isomorphism by vertex extension
(every n-vertex graph is an (n-1)-vertex graph plus one vertex attached to a
neighbourhood subset), dedups with VF2 inside invariant buckets, and writes
the connected ones to src/mcnum/data/connected_n{K}.g6 sorted by (m, graph6).

Counts are asserted against the published sequences:
  all graphs:        1, 2, 4, 11, 34, 156, 1044
  connected graphs:  1, 1, 2, 6, 21, 112, 853
"""

import sys
from collections import defaultdict
from itertools import combinations
from pathlib import Path

import networkx as nx

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from mcnum.graph import Graph, emit_graph6  # noqa: E402

ALL_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}
MAX_N = 7


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def invariant(g: Graph) -> tuple:
    tri = 0
    for u, v in g.edges():
        tri += (g.rows[u] & g.rows[v]).bit_count()
    return (g.m, tuple(sorted(g.degrees())), tri)


def extend_all(level: list[Graph], n: int) -> list[Graph]:
    buckets: dict[tuple, list[tuple[Graph, nx.Graph]]] = defaultdict(list)
    for base in level:
        base_edges = base.edges()
        for r in range(n):
            for subset in combinations(range(n - 1), r):
                cand = Graph(n, base_edges + [(v, n - 1) for v in subset])
                key = invariant(cand)
                cand_nx = to_nx(cand)
                if any(nx.is_isomorphic(cand_nx, seen_nx)
                       for _, seen_nx in buckets[key]):
                    continue
                buckets[key].append((cand, cand_nx))
    return [g for members in buckets.values() for g, _ in members]


def main() -> None:
    out_dir = Path(__file__).resolve().parent.parent / "src" / "mcnum" / "data"
    out_dir.mkdir(parents=True, exist_ok=True)
    level = [Graph(1)]
    for n in range(1, MAX_N + 1):
        if n > 1:
            level = extend_all(level, n)
        assert len(level) == ALL_COUNTS[n], (n, len(level))
        connected = sorted((g for g in level if g.is_connected()),
                           key=lambda g: (g.m, emit_graph6(g)))
        assert len(connected) == CONNECTED_COUNTS[n], (n, len(connected))
        path = out_dir / f"connected_n{n}.g6"
        path.write_text("".join(emit_graph6(g) + "\n" for g in connected))
        print(f"n={n}: {len(level)} graphs, {len(connected)} connected -> {path.name}")


if __name__ == "__main__":
    main()
