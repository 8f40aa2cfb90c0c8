"""Structural quantities the classification theorems condition on.

Vertex connectivity, cut vertices, planarity and outerplanarity, exact
chromatic number, and diameter.  Everything here is exact and intended for
desk-scale graphs (n <= 16; the planarity test is exercised up to n = 12).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .graph import Graph, bits, has_minor


class DisconnectedGraphError(ValueError):
    """Operation requires a connected graph."""


class EmptyGraphError(ValueError):
    """Operation requires at least one vertex."""


@dataclass(frozen=True)
class CutSet:
    """A vertex set whose removal disconnects the graph."""

    vertices: frozenset[int]

    @property
    def order(self) -> int:
        return len(self.vertices)


def _max_vertex_disjoint_paths(g: Graph, s: int, t: int) -> int:
    """Count of internally vertex-disjoint s-t paths (Menger, unit max-flow).

    Every vertex v is split into nodes 2v (in) and 2v+1 (out) with a unit
    arc between them; each edge contributes unit arcs out(x)->in(y) both ways.
    """
    cap: dict[tuple[int, int], int] = {}
    adj: dict[int, list[int]] = {}

    def add_arc(a: int, b: int) -> None:
        cap[(a, b)] = cap.get((a, b), 0) + 1
        cap.setdefault((b, a), 0)
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)

    for v in range(g.n):
        if v not in (s, t):
            add_arc(2 * v, 2 * v + 1)
    for u, v in g.edges():
        add_arc(2 * u + 1, 2 * v)
        add_arc(2 * v + 1, 2 * u)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while True:
        parent = {source: source}
        queue = [source]
        while queue and sink not in parent:
            a = queue.pop(0)
            for b in adj.get(a, ()):
                if b not in parent and cap.get((a, b), 0) > 0:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            return flow
        b = sink
        while b != source:
            a = parent[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1


def vertex_connectivity(g: Graph) -> int:
    """Exact vertex connectivity; 0 for disconnected graphs, n-1 for K_n."""
    if g.n == 0:
        raise EmptyGraphError("connectivity of the empty graph is undefined")
    if not g.is_connected():
        return 0
    if g.is_complete():
        return g.n - 1
    best = g.n - 1
    for u in range(g.n):
        nonadj = g.full_mask & ~g.rows[u] & ~(1 << u) & ~((1 << u) - 1)
        for v in bits(nonadj):
            best = min(best, _max_vertex_disjoint_paths(g, u, v))
            if best == 0:
                return 0
    return best


def minimum_cut_set(g: Graph) -> CutSet:
    """Lexicographically least minimum vertex cut of a connected, non-complete graph."""
    if not g.is_connected():
        raise DisconnectedGraphError("minimum cut requires a connected graph")
    if g.is_complete():
        raise ValueError("complete graphs have no vertex cut")
    k = vertex_connectivity(g)
    for subset in combinations(range(g.n), k):
        removed = g.full_mask
        for v in subset:
            removed &= ~(1 << v)
        if len(g.component_masks(removed)) > 1:
            return CutSet(frozenset(subset))
    raise AssertionError("no cut of size kappa found")


def cut_vertices(g: Graph) -> frozenset[int]:
    """Vertices whose removal disconnects the graph (brute-force removal)."""
    if not g.is_connected():
        raise DisconnectedGraphError("cut vertices are defined for connected graphs")
    if g.n <= 2:
        return frozenset()
    out = []
    for v in range(g.n):
        rest = g.full_mask & ~(1 << v)
        if len(g.component_masks(rest)) > 1:
            out.append(v)
    return frozenset(out)


def is_planar(g: Graph) -> bool:
    """Planarity by forbidden minors: no K5 minor and no K3,3 minor."""
    if g.n <= 4:
        return True
    if g.m > 3 * g.n - 6:
        return False
    return not has_minor(g, "K5") and not has_minor(g, "K3,3")


def is_outerplanar(g: Graph) -> bool:
    """Outerplanarity via the apex trick: K1 v G planar iff G outerplanar."""
    return is_planar(Graph(1).join(g))


def is_outerplanar_by_minors(g: Graph) -> bool:
    """The forbidden-minor formulation: no K4 minor and no K2,3 minor.

    Kept as an independent route; the two formulations must agree.
    """
    return not has_minor(g, "K4") and not has_minor(g, "K2,3")


def max_clique_size(g: Graph) -> int:
    best = 0

    def ext(count: int, cand: int) -> None:
        nonlocal best
        if count > best:
            best = count
        while cand:
            if count + cand.bit_count() <= best:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            ext(count + 1, cand & g.rows[v])

    ext(0, g.full_mask)
    return best


def chromatic_number(g: Graph) -> int:
    """Exact chromatic number by k-colorability backtracking.

    Vertices are branched in order of decreasing degree (lowest index breaks
    ties); a clique provides the starting lower bound.
    """
    if g.n == 0:
        raise EmptyGraphError("chromatic number of the empty graph is undefined")
    if g.m == 0:
        return 1
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    lower = max_clique_size(g)

    def colorable(k: int) -> bool:
        colors = [-1] * g.n

        def assign(idx: int, used: int) -> bool:
            if idx == g.n:
                return True
            v = order[idx]
            forbidden = 0
            for w in bits(g.rows[v]):
                if colors[w] >= 0:
                    forbidden |= 1 << colors[w]
            for c in range(min(used + 1, k)):
                if forbidden >> c & 1:
                    continue
                colors[v] = c
                if assign(idx + 1, max(used, c + 1)):
                    return True
                colors[v] = -1
            return False

        return assign(0, 0)

    for k in range(lower, g.n + 1):
        if colorable(k):
            return k
    raise AssertionError("unreachable: every graph is n-colorable")


def diameter(g: Graph) -> int:
    """Maximum over vertex pairs of the shortest-path length."""
    if g.n == 0:
        raise EmptyGraphError("diameter of the empty graph is undefined")
    if not g.is_connected():
        raise DisconnectedGraphError("diameter requires a connected graph")
    worst = 0
    for s in range(g.n):
        dist = {s: 0}
        queue = [s]
        while queue:
            v = queue.pop(0)
            for w in bits(g.rows[v]):
                if w not in dist:
                    dist[w] = dist[v] + 1
                    queue.append(w)
        worst = max(worst, max(dist.values()))
    return worst


def has_triangle(g: Graph) -> bool:
    for u, v in g.edges():
        if g.rows[u] & g.rows[v]:
            return True
    return False


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise EmptyGraphError("minimum degree of the empty graph is undefined")
    return min(g.degrees())


def max_degree(g: Graph) -> int:
    if g.n == 0:
        raise EmptyGraphError("maximum degree of the empty graph is undefined")
    return max(g.degrees())
