"""Independent brute-force oracles used to validate the package's algorithms.

Everything here favours transparency over speed: exhaustive enumeration over
set partitions, vertex subsets, and color assignments, with planarity
delegated to networkx's embedding-based test.  Nothing in this module calls
the recognizers or searches it is used to check, except for the graph value
type itself.
"""

from itertools import combinations, product

import networkx as nx

from mcnum.graph import Graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def nx_planar(g: Graph) -> bool:
    return nx.check_planarity(to_nx(g))[0]


def nx_outerplanar(g: Graph) -> bool:
    apex = nx.Graph(to_nx(g))
    apex.add_node("apex")
    apex.add_edges_from(("apex", v) for v in range(g.n))
    return nx.check_planarity(apex)[0]


def set_partitions(items, blocks=None):
    """All set partitions of ``items``; optionally into exactly ``blocks``."""
    items = list(items)

    def rec(i, parts):
        if i == len(items):
            if blocks is None or len(parts) == blocks:
                yield [list(p) for p in parts]
            return
        x = items[i]
        for p in parts:
            p.append(x)
            yield from rec(i + 1, parts)
            p.pop()
        if blocks is None or len(parts) < blocks:
            parts.append([x])
            yield from rec(i + 1, parts)
            parts.pop()

    yield from rec(0, [])


def connected_subset(g: Graph, vertices) -> bool:
    vs = set(vertices)
    if not vs:
        return False
    seen = {min(vs)}
    frontier = [min(vs)]
    while frontier:
        v = frontier.pop()
        for w in g.neighbors(v):
            if w in vs and w not in seen:
                seen.add(w)
                frontier.append(w)
    return seen == vs


def complete_cross(g: Graph, parts) -> bool:
    for p, q in combinations(parts, 2):
        for x in p:
            for y in q:
                if not g.has_edge(x, y):
                    return False
    return True


def brute_perfectly_connected(g: Graph, s: int) -> bool:
    """Definition check over all vertices and all s-part partitions."""
    if g.n < s + 1:
        return False
    for v in range(g.n):
        rest = [w for w in range(g.n) if w != v]
        if s == 0:
            if not rest:
                return True
            continue
        for parts in set_partitions(rest, blocks=s):
            if not all(connected_subset(g, p) for p in parts):
                continue
            if not complete_cross(g, parts):
                continue
            if all(sum(1 for w in p if g.has_edge(v, w)) == 1 for p in parts):
                return True
    return False


def brute_family_a(g: Graph, k: int) -> bool:
    if k < 2 or g.n < k + 1:
        return False
    for clique in combinations(range(g.n), k - 1):
        if any(g.degree(c) != g.n - 1 for c in clique):
            continue
        rest = [w for w in range(g.n) if w not in clique]
        if not connected_subset(g, rest):
            continue
        h = g.induced(rest)
        if any(not connected_subset(h, [x for x in range(h.n) if x != v])
               for v in range(h.n)):
            return True
    return False


def brute_b1(g: Graph, k: int) -> bool:
    for u in range(g.n):
        rest = [w for w in range(g.n) if w != u]
        for parts in set_partitions(rest, blocks=k - 1):
            if not all(connected_subset(g, p + [u]) for p in parts):
                continue
            if not complete_cross(g, parts):
                continue
            counts = sorted(sum(1 for w in p if g.has_edge(u, w)) for p in parts)
            if counts == [1] * (k - 2) + [2]:
                return True
    return False


def brute_b2(g: Graph, k: int) -> bool:
    from mcnum.structure import vertex_connectivity
    for subset in combinations(range(g.n), k - 2):
        if any(g.degree(u) != g.n - 1 for u in subset):
            continue
        rest = [w for w in range(g.n) if w not in subset]
        if len(rest) < 3 or not connected_subset(g, rest):
            continue
        if vertex_connectivity(g.induced(rest)) == 2:
            return True
    return False


def brute_b3(g: Graph, k: int) -> bool:
    for subset in combinations(range(g.n), k - 1):
        missing = [(a, b) for a, b in combinations(subset, 2)
                   if not g.has_edge(a, b)]
        if len(missing) != 1:
            continue
        rest = [w for w in range(g.n) if w not in subset]
        if not all(g.has_edge(u, w) for u in subset for w in rest):
            continue
        if not connected_subset(g, rest):
            continue
        h = g.induced(rest)
        if any(not connected_subset(h, [x for x in range(h.n) if x != v])
               for v in range(h.n)):
            return True
    return False


def brute_family_b(g: Graph, k: int) -> bool:
    if k < 3:
        return False
    if brute_perfectly_connected(g, k) or brute_family_a(g, k):
        return False
    return brute_b1(g, k) or brute_b2(g, k) or brute_b3(g, k)


def brute_p1(g: Graph) -> bool:
    for v in range(g.n):
        if g.degree(v) != g.n - 1:
            continue
        rest = [w for w in range(g.n) if w != v]
        h = g.induced(rest)
        if not connected_subset(h, range(h.n)):
            continue
        has_cut = any(h.n >= 3 and not connected_subset(
            h, [x for x in range(h.n) if x != c]) for c in range(h.n))
        if has_cut and nx_outerplanar(h):
            return True
    return False


def brute_p2(g: Graph) -> bool:
    from mcnum.structure import vertex_connectivity
    for v in range(g.n):
        if g.degree(v) != g.n - 1:
            continue
        rest = [w for w in range(g.n) if w != v]
        h = g.induced(rest)
        if h.n < 3 or not connected_subset(h, range(h.n)):
            continue
        if vertex_connectivity(h) != 2 or not nx_outerplanar(h):
            continue
        fan = False
        for u in range(h.n):
            if h.degree(u) == h.n - 1:
                rest2 = h.induced([x for x in range(h.n) if x != u])
                degs = sorted(rest2.degrees())
                if (rest2.m == rest2.n - 1 and connected_subset(rest2, range(rest2.n))
                        and all(d <= 2 for d in degs)):
                    fan = True
        if not fan:
            return True
    return False


def brute_chromatic(g: Graph) -> int:
    if g.m == 0:
        return 1
    for k in range(1, g.n + 1):
        for coloring in product(range(k), repeat=g.n):
            if all(coloring[u] != coloring[v] for u, v in g.edges()):
                return k
    raise AssertionError


def brute_connectivity(g: Graph) -> int:
    """Smallest vertex set whose removal disconnects; n-1 for complete."""
    if not g.is_connected():
        return 0
    if g.is_complete():
        return g.n - 1
    for size in range(g.n - 1):
        for subset in combinations(range(g.n), size):
            rest = [w for w in range(g.n) if w not in subset]
            if len(rest) >= 2 and not connected_subset(g, rest):
                return size
    return g.n - 1
