"""Exact monochromatic connection numbers by exhaustive search.

An MC-coloring partitions the edge set into color classes such that every
vertex pair is joined by a single-color path.  The mc-number is the maximum
number of classes over all valid colorings; classes of one edge are trivial,
larger classes are nontrivial.  In an optimal coloring every nontrivial class
induces a tree, and there is always an optimum in which nontrivial trees
pairwise share at most one vertex (a "simple" coloring), so the search below
runs over systems of edge-disjoint subtrees:

  * trees pairwise intersect in at most one vertex,
  * every nonadjacent vertex pair lies inside some tree
    (adjacent pairs are connected by their own edge's class),
  * minimize total waste  sum(|V(T)| - 2)  over the system;
    the mc-number is then m - waste.

mc_exact performs iterative deepening on the waste; at each level it branches
on the lexicographically least uncovered pair, extends an existing tree by a
path to the missing endpoint(s) or opens a new tree on a fresh path, and
prunes on the waste budget.  A spanning tree gives a feasible system of waste
n-2, so the deepening always terminates.  mc_exact_unrestricted double-checks
the tree/simplicity restriction on small edge counts by enumerating arbitrary
edge partitions and validating them with verify_coloring alone.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional

from .graph import Graph, bits, bfs_spanning_edges, mask_of
from .structure import DisconnectedGraphError

Edge = tuple[int, int]


class NodeBudgetExceeded(RuntimeError):
    """The search exhausted its node budget before proving an optimum."""


class SolverLimitError(ValueError):
    """Input exceeds a hard resource precondition of the requested solver."""


@dataclass(frozen=True)
class SearchOptions:
    node_budget: int = 50_000_000


@dataclass(frozen=True)
class MCColoring:
    """A partition of the edge set into color classes.

    ``classes`` is an ordered tuple; each class is a tuple of (u, v) edges
    with u < v.  Classes with a single edge are trivial, larger ones
    nontrivial.
    """

    n: int
    classes: tuple[tuple[Edge, ...], ...]

    @classmethod
    def from_lists(cls, n: int, classes) -> "MCColoring":
        norm = tuple(
            tuple(sorted((min(u, v), max(u, v)) for u, v in cl))
            for cl in classes
        )
        return cls(n, norm)

    @property
    def colors_used(self) -> int:
        return len(self.classes)

    @property
    def waste(self) -> int:
        return sum(len(cl) - 1 for cl in self.classes if len(cl) >= 2)

    def to_json_dict(self) -> dict:
        return {"n": self.n, "classes": [[list(e) for e in cl] for cl in self.classes]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "MCColoring":
        return cls.from_lists(int(data["n"]), data["classes"])


@dataclass(frozen=True)
class VerificationReport:
    valid: bool
    colors_used: int
    waste: int
    failing_pair: Optional[tuple[int, int]] = None
    failing_reason: Optional[str] = None


@dataclass(frozen=True)
class ExactResult:
    mc: int
    witness: MCColoring
    nodes_explored: int


def verify_coloring(g: Graph, coloring: MCColoring) -> VerificationReport:
    """Check an MC-coloring: partition, class connectivity, pair coverage.

    Failures are reported in a fixed order: partition defects first, then the
    lowest-index disconnected class, then the lexicographically least
    uncovered vertex pair.
    """
    if coloring.n != g.n:
        raise ValueError("coloring and graph disagree on the vertex count")
    colors = len(coloring.classes)
    waste = coloring.waste

    def fail(reason: str, pair: Optional[tuple[int, int]] = None) -> VerificationReport:
        return VerificationReport(False, colors, waste, pair, reason)

    seen: set[Edge] = set()
    for cl in coloring.classes:
        if not cl:
            return fail("not a partition")
        for u, v in cl:
            e = (min(u, v), max(u, v))
            if not (0 <= e[0] < g.n and 0 <= e[1] < g.n) or not g.has_edge(*e):
                return fail("not a partition")
            if e in seen:
                return fail("not a partition")
            seen.add(e)
    if len(seen) != g.m:
        return fail("not a partition")

    spans = []
    for cl in coloring.classes:
        vmask = mask_of(v for e in cl for v in e)
        emask_adj = {v: 0 for v in bits(vmask)}
        for u, v in cl:
            emask_adj[u] |= 1 << v
            emask_adj[v] |= 1 << u
        seed = vmask & -vmask
        reached = seed
        frontier = seed
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= emask_adj[v]
            frontier = nxt & ~reached
            reached |= frontier
        if reached != vmask:
            return fail("class not connected")
        spans.append(vmask)

    for u in range(g.n):
        for v in range(u + 1, g.n):
            want = (1 << u) | (1 << v)
            if not any(span & want == want for span in spans):
                return fail("uncovered pair", (u, v))

    return VerificationReport(True, colors, waste)


def spanning_tree_coloring(g: Graph) -> MCColoring:
    """One nontrivial class on a BFS spanning tree, all other edges trivial."""
    if g.n < 2:
        raise ValueError("spanning tree coloring needs at least two vertices")
    if not g.is_connected():
        raise DisconnectedGraphError("spanning tree coloring needs a connected graph")
    tree = sorted(bfs_spanning_edges(g))
    tree_set = set(tree)
    classes = [tuple(tree)]
    for e in g.edges():
        if e not in tree_set:
            classes.append((e,))
    return MCColoring(g.n, tuple(classes))


def _coloring_from_trees(g: Graph, trees: list[tuple[int, tuple[Edge, ...]]]) -> MCColoring:
    used = set()
    classes = []
    for _, tedges in trees:
        classes.append(tuple(sorted(tedges)))
        used.update(tedges)
    for e in g.edges():
        if e not in used:
            classes.append((e,))
    return MCColoring(g.n, tuple(classes))


class _TreeSystemSearch:
    """Depth-first search for a tree system within a fixed waste budget."""

    def __init__(self, g: Graph, pairs: list[tuple[int, int]], node_budget: int):
        self.g = g
        self.pairs = pairs
        self.node_budget = node_budget
        self.nodes = 0
        self.trees: list[list] = []  # [vmask, edge tuple]
        self.used_edges: set[Edge] = set()
        self.solution: Optional[list[tuple[int, tuple[Edge, ...]]]] = None

    def run(self, budget: int) -> bool:
        self.solution = None
        return self._dfs(budget)

    def _first_uncovered(self) -> Optional[tuple[int, int]]:
        for u, v in self.pairs:
            want = (1 << u) | (1 << v)
            if not any(t[0] & want == want for t in self.trees):
                return (u, v)
        return None

    def _vertex_allowed_in(self, ti: int, grown_mask: int, w: int) -> bool:
        # adding w to tree ti keeps every pairwise intersection at <= 1 vertex
        wbit = 1 << w
        for tj, t in enumerate(self.trees):
            if tj == ti:
                continue
            if t[0] & wbit and t[0] & grown_mask:
                return False
        return True

    def _attach_paths(self, start: int, ti: int,
                      budget: int) -> Iterator[tuple[int, tuple[Edge, ...]]]:
        """Simple paths from ``start`` into tree ``ti``.

        Yields (path vertex mask, path edges); path vertices lie outside the
        tree, respect the pairwise-intersection rule, and use free edges.
        The number of path vertices (= added waste) is at most ``budget``.
        """
        g = self.g
        target = self.trees[ti][0]

        def dfs(v: int, pmask: int, pedges: tuple[Edge, ...]) -> Iterator:
            for w in bits(g.rows[v]):
                e = (min(v, w), max(v, w))
                if e in self.used_edges or e in pedges:
                    continue
                if target >> w & 1:
                    yield pmask, pedges + (e,)
                elif pmask.bit_count() < budget and not pmask >> w & 1:
                    if self._vertex_allowed_in(ti, target | pmask, w):
                        yield from dfs(w, pmask | (1 << w), pedges + (e,))

        if budget < 1:
            return
        if not self._vertex_allowed_in(ti, target, start):
            return
        yield from dfs(start, 1 << start, ())

    def _new_tree_paths(self, u: int, v: int,
                        budget: int) -> Iterator[tuple[int, tuple[Edge, ...]]]:
        """Simple u-v paths usable as fresh trees; waste is vertices - 2."""
        g = self.g

        def allowed(pmask: int, w: int) -> bool:
            wbit = 1 << w
            for t in self.trees:
                if t[0] & wbit and t[0] & pmask:
                    return False
            return True

        if budget < 1:
            return
        start_mask = (1 << u) | (1 << v)
        for t in self.trees:
            if (t[0] & start_mask).bit_count() >= 2:
                return

        def dfs(x: int, pmask: int, pedges: tuple[Edge, ...]) -> Iterator:
            # waste on closing = pmask.bit_count() - 1, so extension needs
            # pmask.bit_count() <= budget and closing pmask.bit_count() <= budget + 1
            for w in bits(g.rows[x]):
                e = (min(x, w), max(x, w))
                if e in self.used_edges or e in pedges:
                    continue
                if w == v:
                    yield pmask | (1 << v), pedges + (e,)
                elif not pmask >> w & 1 and pmask.bit_count() <= budget:
                    if allowed(pmask | (1 << v), w):
                        yield from dfs(w, pmask | (1 << w), pedges + (e,))

        yield from dfs(u, 1 << u, ())

    def _push_tree(self, vmask: int, edges: tuple[Edge, ...]) -> None:
        self.trees.append([vmask, edges])
        self.used_edges.update(edges)

    def _pop_tree(self) -> None:
        vmask, edges = self.trees.pop()
        self.used_edges.difference_update(edges)

    def _grow_tree(self, ti: int, add_mask: int, add_edges: tuple[Edge, ...]):
        old = (self.trees[ti][0], self.trees[ti][1])
        self.trees[ti][0] |= add_mask
        self.trees[ti][1] = self.trees[ti][1] + add_edges
        self.used_edges.update(add_edges)
        return old

    def _shrink_tree(self, ti: int, old, add_edges: tuple[Edge, ...]) -> None:
        self.trees[ti][0], self.trees[ti][1] = old
        self.used_edges.difference_update(add_edges)

    def _dfs(self, budget: int) -> bool:
        self.nodes += 1
        if self.nodes > self.node_budget:
            raise NodeBudgetExceeded(f"node budget {self.node_budget} exhausted")
        pair = self._first_uncovered()
        if pair is None:
            self.solution = [(t[0], tuple(t[1])) for t in self.trees]
            return True
        if budget < 1:
            return False
        u, v = pair

        for ti in range(len(self.trees)):
            tmask = self.trees[ti][0]
            has_u = bool(tmask >> u & 1)
            has_v = bool(tmask >> v & 1)
            if has_u and has_v:
                continue
            if has_u or has_v:
                lone = v if has_u else u
                for pmask, pedges in self._attach_paths(lone, ti, budget):
                    cost = pmask.bit_count()
                    old = self._grow_tree(ti, pmask, pedges)
                    if self._dfs(budget - cost):
                        return True
                    self._shrink_tree(ti, old, pedges)
            else:
                for pmask1, pedges1 in self._attach_paths(u, ti, budget - 1):
                    cost1 = pmask1.bit_count()
                    old1 = self._grow_tree(ti, pmask1, pedges1)
                    for pmask2, pedges2 in self._attach_paths(v, ti, budget - cost1):
                        cost2 = pmask2.bit_count()
                        old2 = self._grow_tree(ti, pmask2, pedges2)
                        if self._dfs(budget - cost1 - cost2):
                            return True
                        self._shrink_tree(ti, old2, pedges2)
                    self._shrink_tree(ti, old1, pedges1)

        for pmask, pedges in self._new_tree_paths(u, v, budget):
            cost = pmask.bit_count() - 2
            self._push_tree(pmask, pedges)
            if self._dfs(budget - cost):
                return True
            self._pop_tree()
        return False


def _nonadjacent_pairs(g: Graph) -> list[tuple[int, int]]:
    return [(u, v) for u in range(g.n) for v in range(u + 1, g.n)
            if not g.has_edge(u, v)]


def mc_exact(g: Graph, opts: Optional[SearchOptions] = None) -> ExactResult:
    """Exact mc-number with an optimal witness coloring.

    Iterative deepening over the total waste; level W is exhausted before
    level W+1 is tried, so the first system found is optimal.  Raises
    NodeBudgetExceeded rather than returning an unproven value.
    """
    opts = opts or SearchOptions()
    if g.n == 0:
        raise ValueError("mc-number of the empty graph is undefined")
    if not g.is_connected():
        raise DisconnectedGraphError("mc-number requires a connected graph")
    if g.n == 1:
        return ExactResult(0, MCColoring(1, ()), 0)
    pairs = _nonadjacent_pairs(g)
    if not pairs:
        coloring = MCColoring(g.n, tuple((e,) for e in g.edges()))
        return ExactResult(g.m, coloring, 0)
    search = _TreeSystemSearch(g, pairs, opts.node_budget)
    for waste in range(1, g.n - 1):
        if search.run(waste):
            coloring = _coloring_from_trees(g, search.solution)
            assert coloring.waste == waste, "search returned a mispriced system"
            return ExactResult(g.m - waste, coloring, search.nodes)
    raise AssertionError("unreachable: a spanning tree realizes waste n-2")


def _edge_partitions_bounded(edges: list[Edge], max_waste: int) -> Iterator[list[list[Edge]]]:
    """Set partitions of the edge list with waste (= len - blocks) below the cap.

    Standard restricted-growth enumeration; assigning an edge to an existing
    block raises the waste by one, so branches at the cap are cut early.
    """
    blocks: list[list[Edge]] = []

    def rec(i: int, waste: int) -> Iterator[list[list[Edge]]]:
        if i == len(edges):
            yield [list(b) for b in blocks]
            return
        e = edges[i]
        if waste + 1 <= max_waste:
            for b in blocks:
                b.append(e)
                yield from rec(i + 1, waste + 1)
                b.pop()
        blocks.append([e])
        yield from rec(i + 1, waste)
        blocks.pop()

    yield from rec(0, 0)


def mc_exact_unrestricted(g: Graph) -> ExactResult:
    """Independent oracle: maximize classes over all edge partitions.

    No tree or simplicity assumption; every complete partition is judged by
    verify_coloring alone.  A spanning tree bounds the optimal waste by n-2,
    which caps the enumeration.  Requires m <= 12.
    """
    if not g.is_connected():
        raise DisconnectedGraphError("mc-number requires a connected graph")
    if g.m > 12:
        raise SolverLimitError("unrestricted enumeration is capped at m <= 12")
    if g.n == 1:
        return ExactResult(0, MCColoring(1, ()), 0)
    pairs = _nonadjacent_pairs(g)
    if not pairs:
        coloring = MCColoring(g.n, tuple((e,) for e in g.edges()))
        return ExactResult(g.m, coloring, 0)

    best = spanning_tree_coloring(g)
    best_waste = best.waste
    edges = g.edges()
    explored = 0
    for blocks in _edge_partitions_bounded(edges, best_waste - 1):
        explored += 1
        candidate = MCColoring.from_lists(g.n, blocks)
        report = verify_coloring(g, candidate)
        if report.valid and candidate.waste < best_waste:
            best = candidate
            best_waste = candidate.waste
    return ExactResult(g.m - best_waste, best, explored)
