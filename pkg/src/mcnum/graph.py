"""Immutable simple graphs on dense integer vertices, with graph6 I/O.

Vertices are the integers 0..n-1.  Adjacency is stored as one bitmask per
vertex, so neighbourhood intersection and union, which dominate the cost of
the recognisers and searches built on top, are single integer operations.
Graphs are immutable; every operation returns a new value, and values are
safe to share across threads or worker processes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

GRAPH6_HEADER = ">>graph6<<"

_MAX_GRAPH6_N = 62


class Graph6Error(ValueError):
    """Malformed graph6 text.  ``offset`` is the index of the offending byte."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class GraphTooLargeError(ValueError):
    """Graph falls outside the supported graph6 size range (n < 63)."""


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """A labeled simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "rows", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self.n = n
        self.rows = tuple(rows)
        self._m = sum(r.bit_count() for r in rows) // 2

    @classmethod
    def _from_rows(cls, rows: Sequence[int]) -> "Graph":
        g = object.__new__(cls)
        g.n = len(rows)
        g.rows = tuple(rows)
        g._m = sum(r.bit_count() for r in rows) // 2
        return g

    # -- basic queries -----------------------------------------------------

    @property
    def m(self) -> int:
        return self._m

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.rows[v]))

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, lexicographically sorted."""
        out = []
        for u in range(self.n):
            higher = self.rows[u] >> (u + 1)
            for k in bits(higher):
                out.append((u, u + 1 + k))
        return out

    def is_complete(self) -> bool:
        return self._m == self.n * (self.n - 1) // 2

    # -- connectivity over vertex masks ------------------------------------

    def reach(self, start: int, within: int) -> int:
        """Vertices reachable from the seed mask ``start`` inside ``within``."""
        seen = start & within
        frontier = seen
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= self.rows[v]
            frontier = nxt & within & ~seen
            seen |= frontier
        return seen

    def is_connected_within(self, mask: int) -> bool:
        """True for the empty mask and for masks inducing a connected subgraph."""
        if mask == 0:
            return True
        seed = mask & -mask
        return self.reach(seed, mask) == mask

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return self.is_connected_within(self.full_mask)

    def component_masks(self, within: Optional[int] = None) -> list[int]:
        """Connected components of the subgraph induced by ``within``."""
        remaining = self.full_mask if within is None else within
        comps = []
        while remaining:
            seed = remaining & -remaining
            comp = self.reach(seed, remaining)
            comps.append(comp)
            remaining &= ~comp
        return comps

    def neighborhood_of(self, mask: int) -> int:
        """Union of neighbourhoods of the vertices in ``mask``, minus ``mask``."""
        out = 0
        for v in bits(mask):
            out |= self.rows[v]
        return out & ~mask

    # -- structural operations ----------------------------------------------

    def complement(self) -> "Graph":
        full = self.full_mask
        rows = [full & ~self.rows[v] & ~(1 << v) for v in range(self.n)]
        return Graph._from_rows(rows)

    def join(self, other: "Graph") -> "Graph":
        """Disjoint union plus all cross edges; self's vertices come first."""
        n1, n2 = self.n, other.n
        other_full = ((1 << n2) - 1) << n1
        rows = [self.rows[v] | other_full for v in range(n1)]
        self_full = (1 << n1) - 1
        for v in range(n2):
            rows.append((other.rows[v] << n1) | self_full)
        return Graph._from_rows(rows)

    def contract_edge(self, u: int, v: int) -> "Graph":
        """Contract the edge (u, v) and return the simple underlying graph.

        The merged vertex takes the label min(u, v); labels above max(u, v)
        shift down by one.
        """
        if u == v or not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError(f"({u},{v}) is not a valid vertex pair")
        if not self.has_edge(u, v):
            raise ValueError(f"({u},{v}) is not an edge of the graph")
        lo, hi = min(u, v), max(u, v)
        merged = (self.rows[lo] | self.rows[hi]) & ~(1 << lo) & ~(1 << hi)
        keep = [w for w in range(self.n) if w != hi]
        relabel = {w: i for i, w in enumerate(keep)}
        new_edges = []
        for w in keep:
            row = merged if w == lo else self.rows[w]
            for x in bits(row):
                if x == hi:
                    x = lo
                if x in relabel and relabel[x] > relabel[w]:
                    new_edges.append((relabel[w], relabel[x]))
        return Graph(self.n - 1, new_edges)

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph, relabeled 0..k-1 in increasing vertex order."""
        verts = sorted(set(vertices))
        index = {v: i for i, v in enumerate(verts)}
        edges = []
        for i, v in enumerate(verts):
            for w in verts[i + 1:]:
                if self.has_edge(v, w):
                    edges.append((index[v], index[w]))
        return Graph(len(verts), edges)

    def without_vertex(self, v: int) -> "Graph":
        return self.induced(w for w in range(self.n) if w != v)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Image graph where old vertex v becomes perm[v]."""
        edges = [(perm[u], perm[v]) for u, v in self.edges()]
        return Graph(self.n, edges)

    # -- value semantics ----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        if self.n <= _MAX_GRAPH6_N:
            return f"Graph({self.n}, {emit_graph6(self)!r})"
        return f"Graph(n={self.n}, m={self.m})"


# -- small named graphs used all over the tests and recognisers -------------


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_multipartite(*sizes: int) -> Graph:
    n = sum(sizes)
    part = []
    for i, s in enumerate(sizes):
        part.extend([i] * s)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if part[u] != part[v]]
    return Graph(n, edges)


def complete_bipartite(a: int, b: int) -> Graph:
    return complete_multipartite(a, b)


# -- graph6 serialization ----------------------------------------------------


def _g6_pairs(n: int) -> Iterator[tuple[int, int]]:
    # upper-triangle order x(0,1), x(0,2), x(1,2), x(0,3), ... (column-major)
    for j in range(1, n):
        for i in range(j):
            yield i, j


def parse_graph6(text: "str | bytes") -> Graph:
    """Decode one graph6-encoded graph (optional '>>graph6<<' header)."""
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise Graph6Error("non-ASCII byte", exc.start) from None
    text = text.strip()
    if text.startswith(GRAPH6_HEADER):
        text = text[len(GRAPH6_HEADER):]
    if not text:
        raise Graph6Error("empty graph6 string", 0)
    first = ord(text[0])
    if first == 126:
        raise Graph6Error("graphs with n >= 63 are not supported", 0)
    if not 63 <= first <= 125:
        raise Graph6Error(f"invalid length byte {first}", 0)
    n = first - 63
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = text[1:]
    if len(body) < nbytes:
        raise Graph6Error("truncated adjacency bit vector", len(text))
    if len(body) > nbytes:
        raise Graph6Error("trailing bytes after adjacency bit vector", 1 + nbytes)
    rows = [0] * n
    for k, ch in enumerate(body):
        val = ord(ch) - 63
        if not 0 <= val <= 63:
            raise Graph6Error(f"invalid data byte {ord(ch)}", 1 + k)
    for idx, (i, j) in enumerate(_g6_pairs(n)):
        val = ord(body[idx // 6]) - 63
        if val >> (5 - idx % 6) & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph._from_rows(rows)


def emit_graph6(g: Graph) -> str:
    """Encode a graph as one graph6 line (no header, no newline)."""
    if g.n > _MAX_GRAPH6_N:
        raise GraphTooLargeError(f"graph6 output supports n < 63, got n={g.n}")
    out = [chr(63 + g.n)]
    acc = 0
    nbits = 0
    for i, j in _g6_pairs(g.n):
        acc = (acc << 1) | (g.rows[i] >> j & 1)
        nbits += 1
        if nbits == 6:
            out.append(chr(63 + acc))
            acc, nbits = 0, 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


# -- shape report -------------------------------------------------------------


@dataclass(frozen=True)
class ShapeReport:
    is_path: bool
    is_cycle: bool
    is_linear_forest: bool
    is_complete: bool
    is_connected: bool
    component_count: int
    degree_sequence: tuple[int, ...]


def shape(g: Graph) -> ShapeReport:
    """Classify the basic shape of a graph (path / cycle / linear forest)."""
    degs = tuple(g.degrees())
    comps = g.component_masks()
    connected = len(comps) <= 1
    acyclic = g.m == g.n - len(comps)
    linear_forest = acyclic and all(d <= 2 for d in degs)
    is_path = connected and linear_forest and g.n >= 1
    is_cycle = connected and g.n >= 3 and all(d == 2 for d in degs)
    return ShapeReport(
        is_path=is_path,
        is_cycle=is_cycle,
        is_linear_forest=linear_forest,
        is_complete=g.is_complete(),
        is_connected=connected,
        component_count=len(comps),
        degree_sequence=degs,
    )


def bfs_spanning_edges(g: Graph, within: Optional[int] = None,
                       root: Optional[int] = None) -> list[tuple[int, int]]:
    """Edges of a deterministic BFS spanning tree of the induced subgraph.

    The root defaults to the least vertex of the mask; neighbours are visited
    in increasing index order.  The mask must induce a connected subgraph.
    """
    mask = g.full_mask if within is None else within
    if mask == 0:
        return []
    if root is None:
        root = (mask & -mask).bit_length() - 1
    seen = 1 << root
    queue = [root]
    tree = []
    while queue:
        v = queue.pop(0)
        for w in bits(g.rows[v] & mask & ~seen):
            seen |= 1 << w
            tree.append((min(v, w), max(v, w)))
            queue.append(w)
    if seen != mask:
        raise ValueError("mask does not induce a connected subgraph")
    return tree


# -- minor detection -----------------------------------------------------------
#
# has_minor answers "does g contain target as a minor" for the four fixed
# targets the planarity and outerplanarity tests need.  The search enumerates
# branch sets directly: disjoint connected vertex sets, one per target vertex,
# with an edge of g between every pair of sets that is adjacent in the target.
# Symmetry is broken through the minimum vertex of each branch set, and
# reductions (leaf deletion, series suppression) shrink the instance first.
# Adequate for n <= 12 inputs; corpus graphs stay at n <= 8.

# slot tables: (adjacency to earlier slots, slot whose branch-set minimum must
# be smaller than this slot's minimum, or None)
_TARGET_SLOTS = {
    "K4": ([(), (0,), (0, 1), (0, 1, 2)], [None, 0, 1, 2], 3),
    "K5": ([(), (0,), (0, 1), (0, 1, 2), (0, 1, 2, 3)], [None, 0, 1, 2, 3], 4),
    # hubs first (degree 3), then the three spokes
    "K2,3": ([(), (), (0, 1), (0, 1), (0, 1)], [None, 0, None, 2, 3], 2),
    # parts interleaved a0 b0 a1 b1 a2 b2
    "K3,3": ([(), (0,), (1,), (0, 2), (1, 3), (0, 2, 4)],
             [None, 0, 0, 1, 2, 3], 3),
}

_TARGET_ALIASES = {
    "K4": "K4", "K5": "K5",
    "K2,3": "K2,3", "K23": "K2,3",
    "K3,3": "K3,3", "K33": "K3,3",
}


def _clique_mask_search(g: Graph, size: int) -> bool:
    """True if g has a clique on ``size`` vertices (subgraph shortcut)."""

    def ext(count: int, cand: int) -> bool:
        if count == size:
            return True
        if count + cand.bit_count() < size:
            return False
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            if ext(count + 1, cand & g.rows[v]):
                return True
            cand ^= low
            if count + cand.bit_count() < size:
                return False
        return False

    return ext(0, g.full_mask)


def _has_subgraph_shortcut(g: Graph, target: str) -> bool:
    if target == "K4":
        return _clique_mask_search(g, 4)
    if target == "K5":
        return _clique_mask_search(g, 5)
    if target == "K2,3":
        for u in range(g.n):
            for v in range(u + 1, g.n):
                common = g.rows[u] & g.rows[v] & ~(1 << u) & ~(1 << v)
                if common.bit_count() >= 3:
                    return True
        return False
    if target == "K3,3":
        for u in range(g.n):
            for v in range(u + 1, g.n):
                for w in range(v + 1, g.n):
                    common = g.rows[u] & g.rows[v] & g.rows[w]
                    common &= ~mask_of((u, v, w))
                    if common.bit_count() >= 3:
                        return True
        return False
    raise AssertionError(target)


def _reduce_for_minor(g: Graph, suppress_deg2: bool) -> Graph:
    """Delete degree<=1 vertices; optionally suppress degree-2 vertices.

    Series suppression is only sound when the target has minimum degree 3,
    so it is switched off for the K2,3 target.
    """
    edges = {frozenset(e) for e in g.edges()}
    alive = set(range(g.n))
    changed = True
    while changed:
        changed = False
        deg = {v: 0 for v in alive}
        nbrs = {v: set() for v in alive}
        for e in edges:
            a, b = tuple(e)
            deg[a] += 1
            deg[b] += 1
            nbrs[a].add(b)
            nbrs[b].add(a)
        for v in sorted(alive):
            if deg.get(v, 0) <= 1:
                alive.discard(v)
                edges = {e for e in edges if v not in e}
                changed = True
                break
            if suppress_deg2 and deg.get(v) == 2:
                a, b = sorted(nbrs[v])
                alive.discard(v)
                edges = {e for e in edges if v not in e}
                edges.add(frozenset((a, b)))
                changed = True
                break
    order = sorted(alive)
    index = {v: i for i, v in enumerate(order)}
    return Graph(len(order), [tuple(sorted((index[a], index[b])))
                              for a, b in map(tuple, edges)])


def _connected_sets(g: Graph, allowed: int, root: int, limit: int,
                    required: tuple[int, ...]) -> Iterator[int]:
    """Connected subsets of ``allowed`` containing ``root`` as minimum vertex.

    Yields only sets of size <= limit that intersect every mask in
    ``required``; branches that can no longer reach some required mask are cut.
    """
    allowed &= ~((1 << root) - 1)

    def grow(smask: int, ext: int, banned: int) -> Iterator[int]:
        if all(smask & r for r in required):
            yield smask
        if smask.bit_count() >= limit:
            return
        pool = ext & ~banned
        while pool:
            low = pool & -pool
            v = low.bit_length() - 1
            pool ^= low
            new_s = smask | low
            new_ext = (ext | (g.rows[v] & allowed)) & ~new_s & ~banned
            yield from grow(new_s, new_ext, banned)
            banned |= low
            # cut when a required mask became unreachable
            if required:
                potential = g.reach(smask, allowed & ~banned)
                if any(not potential & r for r in required):
                    return

    if not allowed >> root & 1:
        return
    yield from grow(1 << root, g.rows[root] & allowed & ~(1 << root), 0)


def has_minor(g: Graph, target: str) -> bool:
    """Exhaustive branch-set test for a K4 / K5 / K2,3 / K3,3 minor."""
    key = _TARGET_ALIASES.get(target)
    if key is None:
        raise ValueError(f"unsupported minor target {target!r}")
    slot_adj, slot_minprev, min_deg = _TARGET_SLOTS[key]
    h = len(slot_adj)
    target_edges = sum(len(a) for a in slot_adj)

    for comp in g.component_masks():
        sub = g.induced(bits(comp))
        sub = _reduce_for_minor(sub, suppress_deg2=(min_deg >= 3))
        if sub.n < h or sub.m < target_edges:
            continue
        if _has_subgraph_shortcut(sub, key):
            return True
        if _branch_set_search(sub, slot_adj, slot_minprev):
            return True
    return False


def _branch_set_search(g: Graph, slot_adj, slot_minprev) -> bool:
    h = len(slot_adj)
    full = g.full_mask
    branch = [0] * h
    branch_nbhd = [0] * h
    # after slot i is placed: how many unplaced target-neighbours slot j still
    # has; disjoint future branch sets each need a private free neighbour
    needed_count = [
        tuple(sum(1 for f in range(i + 1, h) if j in slot_adj[f])
              for j in range(i + 1))
        for i in range(h)
    ]

    def place(i: int, used: int) -> bool:
        if i == h:
            return True
        free = full & ~used
        if free.bit_count() < h - i:
            return False
        required = tuple(branch_nbhd[j] & free for j in slot_adj[i])
        if any(r == 0 for r in required):
            return False
        prev = slot_minprev[i]
        min_floor = -1
        if prev is not None:
            min_floor = (branch[prev] & -branch[prev]).bit_length() - 1
        limit = free.bit_count() - (h - i - 1)
        counts = needed_count[i]
        for root in bits(free):
            if root <= min_floor:
                continue
            for smask in _connected_sets(g, free, root, limit, required):
                new_free = free & ~smask
                s_nbhd = g.neighborhood_of(smask)
                ok = True
                for j in range(i + 1):
                    need = counts[j]
                    if need:
                        nb = s_nbhd if j == i else branch_nbhd[j]
                        if (nb & new_free).bit_count() < need:
                            ok = False
                            break
                if not ok:
                    continue
                branch[i] = smask
                branch_nbhd[i] = s_nbhd
                if place(i + 1, used | smask):
                    return True
        branch[i] = 0
        branch_nbhd[i] = 0
        return False

    return place(0, 0)
