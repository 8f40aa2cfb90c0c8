"""Classification of mc-numbers from structure, and extremal constructions.

classify applies the characterizations in a fixed precedence and returns
either an exact mc-value with provenance (rule tag plus optional family
witness) or an interval of bounds.  construct_coloring turns a witness into
a concrete optimal coloring realizing the classified value.

The precedence encodes two elimination steps that convert iff
characterizations of the top values into exact verdicts for the floor:
at connectivity 2 the only values are m-n+2 and m-n+3 and the top is fully
characterized, and at connectivity 3 both m-n+4 and m-n+3 are characterized,
so a graph matching neither characterization sits at m-n+2.  For planar
graphs at connectivity 4 and 5 the join-shape table closes the remaining
cases; only nonplanar graphs of connectivity >= 4 ever get an interval.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .graph import Graph, bits, mask_of
from .solver import MCColoring
from .structure import (DisconnectedGraphError, chromatic_number, cut_vertices,
                        diameter, has_triangle, is_planar, max_degree,
                        min_degree, vertex_connectivity)
from .families import (FamilyA, FamilyB1, FamilyB2, FamilyB3, FamilyWitness,
                       InvalidWitnessError, P1, P2, PerfectlyConnected,
                       SpecialJoin, recognize_family_a, recognize_family_b,
                       recognize_perfectly_connected, recognize_special_join,
                       validate_witness)


@dataclass(frozen=True)
class Exact:
    value: int
    formula: str
    rule: str
    witness: Optional[FamilyWitness] = None


@dataclass(frozen=True)
class BoundsVerdict:
    lower: int
    upper: int
    rules: tuple[str, ...]


@dataclass(frozen=True)
class MCClassification:
    kappa: int
    planar: bool
    verdict: Union[Exact, BoundsVerdict]


FLOOR_RULES = ("complement-4-connected", "triangle-free", "degree-bound",
               "diameter", "cut-vertex")


def quick_floor(g: Graph) -> Optional[str]:
    """First satisfied floor condition forcing the minimum value m-n+2.

    Checked in a fixed order: 4-connected complement, triangle-free, the
    maximum-degree bound (exact integer arithmetic, n >= 4 only), diameter at
    least three, and a cut vertex.
    """
    if g.n < 3 or not g.is_connected():
        raise ValueError("floor conditions apply to connected graphs with n >= 3")
    if vertex_connectivity(g.complement()) >= 4:
        return "complement-4-connected"
    if not has_triangle(g):
        return "triangle-free"
    n, m = g.n, g.m
    if n >= 4:
        # max degree < n - (2m - 3(n-1)) / (n-3), scaled by n-3 > 0
        if max_degree(g) * (n - 3) < n * (n - 3) - (2 * m - 3 * (n - 1)):
            return "degree-bound"
    if diameter(g) >= 3:
        return "diameter"
    if cut_vertices(g):
        return "cut-vertex"
    return None


def classify(g: Graph) -> MCClassification:
    """Exact mc-value with provenance where characterized, else bounds."""
    if g.n == 0:
        raise ValueError("cannot classify the empty graph")
    if not g.is_connected():
        raise DisconnectedGraphError("classification requires a connected graph")
    n, m = g.n, g.m
    kappa = vertex_connectivity(g)
    planar = is_planar(g)

    def exact(value: int, formula: str, rule: str,
              witness: Optional[FamilyWitness] = None) -> MCClassification:
        return MCClassification(kappa, planar, Exact(value, formula, rule, witness))

    if n <= 2:
        return exact(m, "m", "small-graph")
    if g.is_complete():
        return exact(m, "m", "complete")

    s = min_degree(g)
    pc = recognize_perfectly_connected(g, s)
    if pc is not None:
        return exact(m - n + s + 1, "m-n+s+1", "perfectly-connected", pc)

    floor_rule = quick_floor(g)
    if floor_rule is not None:
        return exact(m - n + 2, "m-n+2", f"floor:{floor_rule}")

    k = kappa
    if k >= 2:
        wa = recognize_family_a(g, k)
        if wa is not None:
            return exact(m - n + k + 1, "m-n+k+1", "family-a", wa)
        wpc = recognize_perfectly_connected(g, k)
        if wpc is not None:
            return exact(m - n + k + 1, "m-n+k+1", "perfectly-connected", wpc)
    if k >= 3:
        wb = recognize_family_b(g, k)
        if wb is not None:
            rule = {FamilyB1: "family-b1", FamilyB2: "family-b2",
                    FamilyB3: "family-b3"}[type(wb)]
            return exact(m - n + k, "m-n+k", rule, wb)
    if k == 1:
        return exact(m - n + 2, "m-n+2", "floor:cut-vertex")
    if k == 2:
        return exact(m - n + 2, "m-n+2", "elimination-k2")
    if k == 3:
        return exact(m - n + 2, "m-n+2", "elimination-k3")

    if planar:
        if k == 4:
            join = recognize_special_join(g)
            if join is not None and join.kind == "2K1vC":
                return exact(m - n + 3, "m-n+3", "planar-join-2k1-cycle", join)
            return exact(m - n + 2, "m-n+2", "planar-k4-default")
        # planar connectivity tops out at 5
        return exact(m - n + 2, "m-n+2", "planar-k5")

    chi = chromatic_number(g)
    uppers = {"chromatic": m - n + chi, "connectivity": m - n + k - 1,
              "min-degree": m - n + s}
    upper = min(uppers.values())
    rules = tuple(sorted(tag for tag, val in uppers.items() if val == upper))
    return MCClassification(kappa, planar,
                            BoundsVerdict(m - n + 2, upper, rules))


# -- constructions ------------------------------------------------------------


def _span_edges(g: Graph, vertices: frozenset[int]) -> list[tuple[int, int]]:
    """Deterministic BFS spanning tree of the induced subgraph, original labels."""
    mask = mask_of(vertices)
    root = min(vertices)
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
        raise InvalidWitnessError("witness set does not induce a connected subgraph")
    return sorted(tree)


def _finish(g: Graph, trees: list[list[tuple[int, int]]]) -> MCColoring:
    used = set()
    classes = []
    for t in trees:
        classes.append(tuple(sorted(t)))
        used.update(t)
    for e in g.edges():
        if e not in used:
            classes.append((e,))
    return MCColoring(g.n, tuple(classes))


def construct_coloring(g: Graph, w: FamilyWitness) -> MCColoring:
    """Optimal coloring built from a family witness by the join recipes.

    Each variant colors one or more explicit trees (spanning trees of the
    join remainder, the per-part trees through the distinguished vertex, or a
    2-path across the nonadjacent side) and leaves every other edge trivial.
    The output always verifies and realizes the classified exact value.
    """
    validate_witness(g, w)
    if isinstance(w, (FamilyA, P1)):
        return _finish(g, [_span_edges(g, w.h_vertices)])
    if isinstance(w, PerfectlyConnected):
        trees = [_span_edges(g, part | {w.v}) for part in w.parts]
        return _finish(g, trees)
    if isinstance(w, FamilyB1):
        trees = [_span_edges(g, part | {w.u}) for part in w.parts]
        return _finish(g, trees)
    if isinstance(w, (FamilyB2, P2)):
        vertices = w.v_set if isinstance(w, FamilyB2) else w.h_vertices
        return _finish(g, [_span_edges(g, vertices)])
    if isinstance(w, FamilyB3):
        tree = _span_edges(g, w.v_set)
        z = min(w.v_set)
        a, b = w.missing_pair
        two_path = [(min(a, z), max(a, z)), (min(b, z), max(b, z))]
        return _finish(g, [tree, sorted(two_path)])
    if isinstance(w, SpecialJoin):
        spine_edges = [(min(x, y), max(x, y)) for x, y in zip(w.spine, w.spine[1:])]
        if w.kind == "K2vP":
            return _finish(g, [sorted(spine_edges)])
        a, b = sorted(w.a_set)
        z = w.spine[0]
        two_path = sorted([(min(a, z), max(a, z)), (min(b, z), max(b, z))])
        return _finish(g, [sorted(spine_edges), two_path])
    raise InvalidWitnessError(f"no construction for witness type {type(w).__name__}")
