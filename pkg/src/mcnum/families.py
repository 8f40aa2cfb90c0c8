"""Recognizers for the structural families behind the extremal mc-values.

Each recognizer either returns a witness certificate or None.  Witnesses carry
enough data (the vertex, the parts, the join sides) for an independent
validator to re-check the family definition without repeating the search.

All multipartite structure is derived from connected components of the
complement: between two distinct complement components every cross pair is
adjacent, so the admissible partitions of a family are exactly the groupings
of complement components, and the recognizers search those groupings.  That
keeps recognition labeling-independent and deterministic (components and
candidates are always scanned in least-vertex order).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional, Union

from .graph import Graph, bits, mask_of, shape
from .structure import cut_vertices, is_outerplanar, vertex_connectivity


@dataclass(frozen=True)
class PerfectlyConnected:
    """Partition {v}, V_1..V_s: connected parts forming a complete s-partite
    graph, with v having exactly one neighbour in each part."""

    v: int
    parts: tuple[frozenset[int], ...]
    s: int


@dataclass(frozen=True)
class FamilyA:
    """Clique of universal vertices joined to a connected graph with a cut
    vertex."""

    clique: frozenset[int]
    h_vertices: frozenset[int]
    h_cut_vertex: int


@dataclass(frozen=True)
class FamilyB1:
    """Partition {u}, U_1..U_{k-1}: complete multipartite parts, each part
    plus u connected, u with two neighbours in part t and one elsewhere."""

    u: int
    parts: tuple[frozenset[int], ...]
    t: int


@dataclass(frozen=True)
class FamilyB2:
    """Clique of k-2 universal vertices joined to a 2-connected but not
    3-connected remainder."""

    u_set: frozenset[int]
    v_set: frozenset[int]


@dataclass(frozen=True)
class FamilyB3:
    """A (k-1)-clique minus one edge, universal to a connected remainder that
    has a cut vertex."""

    u_set: frozenset[int]
    missing_pair: tuple[int, int]
    v_set: frozenset[int]


@dataclass(frozen=True)
class P1:
    """Apex over a connected outerplanar graph with a cut vertex."""

    apex: int
    h_vertices: frozenset[int]


@dataclass(frozen=True)
class P2:
    """Apex over a 2-connected outerplanar graph that is not a fan."""

    apex: int
    h_vertices: frozenset[int]


@dataclass(frozen=True)
class SpecialJoin:
    """A two-vertex side joined to a path or cycle spine."""

    kind: str  # "K2vP" | "2K1vP" | "2K1vC"
    a_set: frozenset[int]
    spine: tuple[int, ...]


FamilyWitness = Union[PerfectlyConnected, FamilyA, FamilyB1, FamilyB2,
                      FamilyB3, P1, P2, SpecialJoin]


# -- helpers -----------------------------------------------------------------


def _complement_components(g: Graph, within: int) -> list[int]:
    """Components of the complement of the subgraph induced by ``within``."""
    comp = g.complement()
    return sorted(comp.component_masks(within))


def _universal_vertices(g: Graph) -> list[int]:
    return [v for v in range(g.n) if g.degree(v) == g.n - 1]


def _is_fan(g: Graph, hmask: int) -> bool:
    """True when the induced subgraph is an apex over a path."""
    hsize = hmask.bit_count()
    for u in bits(hmask):
        if (g.rows[u] & hmask).bit_count() == hsize - 1:
            rest = g.induced(bits(hmask & ~(1 << u)))
            if shape(rest).is_path:
                return True
    return False


def _path_order(g: Graph, mask: int) -> Optional[tuple[int, ...]]:
    """Vertices of a path-shaped mask in traversal order, or None."""
    verts = list(bits(mask))
    sub_degs = {v: (g.rows[v] & mask).bit_count() for v in verts}
    if len(verts) == 1:
        return (verts[0],)
    ends = sorted(v for v in verts if sub_degs[v] == 1)
    if len(ends) != 2 or any(sub_degs[v] > 2 for v in verts):
        return None
    order = [ends[0]]
    seen = 1 << ends[0]
    while len(order) < len(verts):
        nxt = g.rows[order[-1]] & mask & ~seen
        if not nxt:
            return None
        v = (nxt & -nxt).bit_length() - 1
        order.append(v)
        seen |= 1 << v
    if order[-1] != ends[1]:
        return None
    return tuple(order)


def _cycle_order(g: Graph, mask: int) -> Optional[tuple[int, ...]]:
    """Vertices of a cycle-shaped mask starting at its least vertex, or None."""
    verts = list(bits(mask))
    if len(verts) < 3:
        return None
    if any((g.rows[v] & mask).bit_count() != 2 for v in verts):
        return None
    start = verts[0]
    first = ((g.rows[start] & mask) & -(g.rows[start] & mask)).bit_length() - 1
    order = [start, first]
    seen = (1 << start) | (1 << first)
    while len(order) < len(verts):
        nxt = g.rows[order[-1]] & mask & ~seen
        if not nxt:
            return None
        v = (nxt & -nxt).bit_length() - 1
        order.append(v)
        seen |= 1 << v
    if not g.has_edge(order[-1], start):
        return None
    return tuple(order)


# -- perfectly connected -------------------------------------------------------


def recognize_perfectly_connected(g: Graph, s: int) -> Optional[PerfectlyConnected]:
    """Witness that the graph is s-perfectly-connected, for the least valid v.

    For a candidate v of degree s the admissible parts are groupings of the
    complement components of g - v: a component holding two neighbours of v
    can never split across parts, singleton groups must induce a connected
    subgraph on their own, and components without a neighbour of v must merge
    into some anchored group (any merge works, the cross edges are complete).
    """
    if g.n < s + 1 or not g.is_connected():
        return None
    rest_all = g.full_mask
    for v in range(g.n):
        if g.degree(v) != s:
            continue
        rest = rest_all & ~(1 << v)
        comps = _complement_components(g, rest)
        nbr = g.rows[v]
        anchored = [c for c in comps if (c & nbr).bit_count() == 1]
        overloaded = [c for c in comps if (c & nbr).bit_count() > 1]
        unanchored = [c for c in comps if not c & nbr]
        if overloaded or len(anchored) != s:
            continue
        lonely = [i for i, c in enumerate(anchored) if not g.is_connected_within(c)]
        if len(unanchored) < len(lonely):
            continue
        groups = list(anchored)
        pool = list(unanchored)
        for i in lonely:
            groups[i] |= pool.pop(0)
        if pool:
            if not groups:
                continue
            for extra in pool:
                groups[0] |= extra
        parts = tuple(sorted((frozenset(bits(gm)) for gm in groups), key=min))
        return PerfectlyConnected(v=v, parts=parts, s=s)
    return None


# -- family A -------------------------------------------------------------------


def recognize_family_a(g: Graph, k: int) -> Optional[FamilyA]:
    """Witness that g is a (k-1)-clique of universal vertices joined to a
    connected graph with a cut vertex."""
    if k < 2 or not g.is_connected() or g.n < k + 1:
        return None
    universal = _universal_vertices(g)
    if len(universal) < k - 1:
        return None
    for clique in combinations(universal, k - 1):
        cmask = mask_of(clique)
        hmask = g.full_mask & ~cmask
        if not g.is_connected_within(hmask):
            continue
        h = g.induced(bits(hmask))
        cuts = cut_vertices(h)
        if cuts:
            hverts = sorted(bits(hmask))
            cut_vertex = hverts[min(cuts)]
            return FamilyA(clique=frozenset(clique),
                           h_vertices=frozenset(hverts),
                           h_cut_vertex=cut_vertex)
    return None


# -- family B -------------------------------------------------------------------


def _partitions_into_blocks(items: list[int], blocks: int) -> Iterator[list[list[int]]]:
    """Set partitions of ``items`` into exactly ``blocks`` nonempty blocks,
    in restricted-growth (lexicographic) order."""
    n = len(items)
    if blocks > n:
        return
    assign = [0] * n

    def rec(i: int, used: int) -> Iterator[list[list[int]]]:
        if n - i < blocks - used:
            return
        if i == n:
            if used == blocks:
                out: list[list[int]] = [[] for _ in range(blocks)]
                for j, a in enumerate(assign):
                    out[a].append(items[j])
                yield out
            return
        for b in range(min(used + 1, blocks)):
            assign[i] = b
            yield from rec(i + 1, max(used, b + 1))

    yield from rec(0, 0)


def _b1_for_vertex(g: Graph, u: int, k: int) -> Optional[FamilyB1]:
    rest = g.full_mask & ~(1 << u)
    comps = _complement_components(g, rest)
    nbr = g.rows[u]
    if any((c & nbr).bit_count() > 2 for c in comps):
        return None

    def block_ok(block_mask: int, members: int) -> bool:
        # single component: every piece of its induced subgraph must touch u
        if members == 1:
            for piece in g.component_masks(block_mask):
                if not piece & nbr:
                    return False
        return True

    for partition in _partitions_into_blocks(list(range(len(comps))), k - 1):
        masks = []
        counts = []
        ok = True
        for block in partition:
            bm = 0
            for idx in block:
                bm |= comps[idx]
            cnt = (bm & nbr).bit_count()
            if cnt not in (1, 2) or not block_ok(bm, len(block)):
                ok = False
                break
            masks.append(bm)
            counts.append(cnt)
        if not ok or counts.count(2) != 1:
            continue
        order = sorted(range(len(masks)), key=lambda i: masks[i] & -masks[i])
        parts = tuple(frozenset(bits(masks[i])) for i in order)
        t = order.index(counts.index(2))
        return FamilyB1(u=u, parts=parts, t=t)
    return None


def recognize_family_b(g: Graph, k: int) -> Optional[Union[FamilyB1, FamilyB2, FamilyB3]]:
    """First witness among the three join-flavoured families, or None.

    The caller guarantees that g is k-connected but not (k+1)-connected with
    k >= 3.  All three families exclude graphs that are k-perfectly-connected
    or recognized by the clique-join family, so those recognizers run first.
    """
    if k < 3 or not g.is_connected():
        return None
    if recognize_perfectly_connected(g, k) is not None:
        return None
    if recognize_family_a(g, k) is not None:
        return None

    # flavour 1: distinguished vertex of degree k
    for u in range(g.n):
        if g.degree(u) != k:
            continue
        witness = _b1_for_vertex(g, u, k)
        if witness is not None:
            return witness

    # flavour 2: (k-2) universal vertices over a 2-connected, not 3-connected rest
    universal = _universal_vertices(g)
    if len(universal) >= k - 2 and g.n - (k - 2) >= 3:
        for subset in combinations(universal, k - 2):
            umask = mask_of(subset)
            vmask = g.full_mask & ~umask
            rest = g.induced(bits(vmask))
            if rest.is_connected() and vertex_connectivity(rest) == 2:
                return FamilyB2(u_set=frozenset(subset),
                                v_set=frozenset(bits(vmask)))

    # flavour 3: (k-1)-clique minus one edge, universal to the rest
    near_universal = [v for v in range(g.n) if g.degree(v) >= g.n - 2]
    if len(near_universal) >= k - 1:
        for subset in combinations(near_universal, k - 1):
            umask = mask_of(subset)
            vmask = g.full_mask & ~umask
            missing = [(a, b) for a, b in combinations(subset, 2)
                       if not g.has_edge(a, b)]
            if len(missing) != 1:
                continue
            if any(g.rows[v] & vmask != vmask for v in subset):
                continue
            if not g.is_connected_within(vmask):
                continue
            rest = g.induced(bits(vmask))
            if rest.n >= 3 and cut_vertices(rest):
                return FamilyB3(u_set=frozenset(subset),
                                missing_pair=missing[0],
                                v_set=frozenset(bits(vmask)))
    return None


# -- planar families ---------------------------------------------------------------


def recognize_p1(g: Graph) -> Optional[P1]:
    """Apex over a connected outerplanar graph with a cut vertex."""
    if not g.is_connected() or g.n < 4:
        return None
    for v in _universal_vertices(g):
        hmask = g.full_mask & ~(1 << v)
        h = g.induced(bits(hmask))
        if not h.is_connected():
            continue
        if cut_vertices(h) and is_outerplanar(h):
            return P1(apex=v, h_vertices=frozenset(bits(hmask)))
    return None


def recognize_p2(g: Graph) -> Optional[P2]:
    """Apex over a 2-connected outerplanar graph that is not itself a fan."""
    if not g.is_connected() or g.n < 4:
        return None
    for v in _universal_vertices(g):
        hmask = g.full_mask & ~(1 << v)
        h = g.induced(bits(hmask))
        if not h.is_connected() or vertex_connectivity(h) != 2:
            continue
        if not is_outerplanar(h):
            continue
        if _is_fan(g, hmask):
            continue
        return P2(apex=v, h_vertices=frozenset(bits(hmask)))
    return None


def _special_joins(g: Graph) -> Iterator[SpecialJoin]:
    if not g.is_connected() or g.n < 4:
        return
    for a, b in combinations(range(g.n), 2):
        amask = (1 << a) | (1 << b)
        spine_mask = g.full_mask & ~amask
        if g.rows[a] & spine_mask != spine_mask:
            continue
        if g.rows[b] & spine_mask != spine_mask:
            continue
        adjacent = g.has_edge(a, b)
        path = _path_order(g, spine_mask)
        if path is not None and len(path) >= 2:
            kind = "K2vP" if adjacent else "2K1vP"
            yield SpecialJoin(kind=kind, a_set=frozenset((a, b)), spine=path)
        elif not adjacent:
            cyc = _cycle_order(g, spine_mask)
            if cyc is not None:
                yield SpecialJoin(kind="2K1vC", a_set=frozenset((a, b)), spine=cyc)


def recognize_special_join(g: Graph) -> Optional[SpecialJoin]:
    """Detect the three join shapes with a 2-vertex side: K2 v path,
    2K1 v path, and 2K1 v cycle.  First representation in pair order wins;
    a graph can decompose in several ways (K5 minus an edge is both
    2K1 v C3 and K2 v P3), so exhaustive callers use special_join_kinds."""
    return next(_special_joins(g), None)


def special_join_kinds(g: Graph) -> frozenset[str]:
    """All join kinds realized by some universal-to-the-rest vertex pair."""
    return frozenset(w.kind for w in _special_joins(g))


# -- witness validation ----------------------------------------------------------


class InvalidWitnessError(ValueError):
    """A witness failed re-validation against its family definition."""


def _check(cond: bool, message: str) -> None:
    if not cond:
        raise InvalidWitnessError(message)


def validate_witness(g: Graph, w: FamilyWitness) -> None:
    """Re-check a witness against the family definition it claims.

    Deliberately independent of the recognizer search paths: validation only
    reads the certificate fields and tests the definition clause by clause.
    Raises InvalidWitnessError on the first violated clause.
    """
    if isinstance(w, PerfectlyConnected):
        all_parts = [sorted(p) for p in w.parts]
        flat = sorted(v for p in all_parts for v in p)
        _check(len(w.parts) == w.s, "part count differs from s")
        _check(flat == sorted(set(flat)), "parts overlap")
        _check(sorted(flat + [w.v]) == list(range(g.n)), "parts do not cover the graph")
        _check(g.degree(w.v) == w.s, "distinguished vertex degree differs from s")
        for p in w.parts:
            pmask = mask_of(p)
            _check(g.is_connected_within(pmask), "part is not connected")
            _check((g.rows[w.v] & pmask).bit_count() == 1,
                   "v does not have exactly one neighbour in a part")
        for p, q in combinations(w.parts, 2):
            for x in p:
                for y in q:
                    _check(g.has_edge(x, y), "cross pair between parts missing")
    elif isinstance(w, FamilyA):
        _check(not w.clique & w.h_vertices, "sides overlap")
        _check(w.clique | w.h_vertices == set(range(g.n)), "sides do not cover")
        for c in w.clique:
            _check(g.degree(c) == g.n - 1, "clique vertex is not universal")
        hmask = mask_of(w.h_vertices)
        _check(g.is_connected_within(hmask), "join remainder is not connected")
        h = g.induced(sorted(w.h_vertices))
        hverts = sorted(w.h_vertices)
        _check(hverts.index(w.h_cut_vertex) in cut_vertices(h),
               "named vertex is not a cut vertex of the remainder")
    elif isinstance(w, FamilyB1):
        flat = sorted(v for p in w.parts for v in p)
        _check(flat == sorted(set(flat)), "parts overlap")
        _check(sorted(flat + [w.u]) == list(range(g.n)), "parts do not cover the graph")
        counts = []
        for p in w.parts:
            pmask = mask_of(p)
            _check(g.is_connected_within(pmask | (1 << w.u)),
                   "part plus u is not connected")
            counts.append((g.rows[w.u] & pmask).bit_count())
        _check(counts[w.t] == 2, "distinguished part lacks two neighbours of u")
        _check(all(c == 1 for i, c in enumerate(counts) if i != w.t),
               "u must have exactly one neighbour in the other parts")
        for p, q in combinations(w.parts, 2):
            for x in p:
                for y in q:
                    _check(g.has_edge(x, y), "cross pair between parts missing")
    elif isinstance(w, FamilyB2):
        _check(not w.u_set & w.v_set, "sides overlap")
        _check(w.u_set | w.v_set == set(range(g.n)), "sides do not cover")
        for u in w.u_set:
            _check(g.degree(u) == g.n - 1, "join-side vertex is not universal")
        rest = g.induced(sorted(w.v_set))
        _check(rest.is_connected() and vertex_connectivity(rest) == 2,
               "remainder is not 2-connected-but-not-3-connected")
    elif isinstance(w, FamilyB3):
        _check(not w.u_set & w.v_set, "sides overlap")
        _check(w.u_set | w.v_set == set(range(g.n)), "sides do not cover")
        a, b = w.missing_pair
        _check(a in w.u_set and b in w.u_set and not g.has_edge(a, b),
               "missing pair is not a nonadjacent pair of the join side")
        for x, y in combinations(sorted(w.u_set), 2):
            if (min(x, y), max(x, y)) != (min(a, b), max(a, b)):
                _check(g.has_edge(x, y), "join side misses a second edge")
        vmask = mask_of(w.v_set)
        for u in w.u_set:
            _check(g.rows[u] & vmask == vmask, "join side is not universal to the rest")
        rest = g.induced(sorted(w.v_set))
        _check(rest.is_connected(), "remainder is not connected")
        _check(bool(cut_vertices(rest)), "remainder has no cut vertex")
    elif isinstance(w, P1):
        _check(g.degree(w.apex) == g.n - 1, "apex is not universal")
        _check(w.h_vertices == set(range(g.n)) - {w.apex}, "base does not cover")
        h = g.induced(sorted(w.h_vertices))
        _check(h.is_connected(), "base is not connected")
        _check(bool(cut_vertices(h)), "base has no cut vertex")
        _check(is_outerplanar(h), "base is not outerplanar")
    elif isinstance(w, P2):
        _check(g.degree(w.apex) == g.n - 1, "apex is not universal")
        _check(w.h_vertices == set(range(g.n)) - {w.apex}, "base does not cover")
        h = g.induced(sorted(w.h_vertices))
        _check(h.is_connected() and vertex_connectivity(h) == 2,
               "base is not 2-connected-but-not-3-connected")
        _check(is_outerplanar(h), "base is not outerplanar")
        _check(not _is_fan(g, mask_of(w.h_vertices)), "base is a fan")
    elif isinstance(w, SpecialJoin):
        _check(len(w.a_set) == 2, "join side must have two vertices")
        a, b = sorted(w.a_set)
        spine_mask = mask_of(w.spine)
        _check(set(w.spine) | w.a_set == set(range(g.n)), "spine does not cover")
        _check(g.rows[a] & spine_mask == spine_mask, "side vertex not universal to spine")
        _check(g.rows[b] & spine_mask == spine_mask, "side vertex not universal to spine")
        for x, y in zip(w.spine, w.spine[1:]):
            _check(g.has_edge(x, y), "spine is not a path in order")
        if w.kind == "K2vP":
            _check(g.has_edge(a, b), "side must be an edge")
            _check(_path_order(g, spine_mask) is not None, "spine is not a path")
        elif w.kind == "2K1vP":
            _check(not g.has_edge(a, b), "side must be a nonedge")
            _check(_path_order(g, spine_mask) is not None, "spine is not a path")
        elif w.kind == "2K1vC":
            _check(not g.has_edge(a, b), "side must be a nonedge")
            _check(_cycle_order(g, spine_mask) is not None, "spine is not a cycle")
            _check(g.has_edge(w.spine[0], w.spine[-1]), "cycle does not close")
        else:
            raise InvalidWitnessError(f"unknown join kind {w.kind!r}")
    else:
        raise InvalidWitnessError(f"unknown witness type {type(w).__name__}")
