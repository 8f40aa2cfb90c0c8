"""Corpus cross-validation: run every characterization as a check over a
stream of graph6 lines and report violations.

Each graph is parsed and solved exactly once; the enabled checks then compare
the solver's ground truth against the bounds, the floor conditions, the
family characterizations, the planar table, the witness constructions, and
(for small edge counts) the unrestricted partition oracle.  Reports are
deterministic: violations are ordered by input position and check name
regardless of the worker count.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .graph import Graph, Graph6Error, parse_graph6
from .solver import (ExactResult, NodeBudgetExceeded, SearchOptions,
                     mc_exact, mc_exact_unrestricted, spanning_tree_coloring,
                     verify_coloring)
from .structure import (chromatic_number, min_degree, vertex_connectivity)
from .classifier import (BoundsVerdict, Exact, classify, construct_coloring,
                         quick_floor)
from .families import (recognize_family_a, recognize_family_b,
                       recognize_perfectly_connected, special_join_kinds,
                       validate_witness)

CHECK_ORDER = ("format", "bounds", "fastpaths", "thm21", "thm24", "prop13",
               "planar-table", "constructions", "oracle")
ALL_CHECKS = frozenset(CHECK_ORDER) | {"budget"}

ORACLE_EDGE_CAP = 12


@dataclass(frozen=True)
class Violation:
    graph6: str
    check: str
    expected: str
    actual: str


@dataclass
class CorpusReport:
    graphs_processed: int = 0
    skipped: int = 0
    violations: list[Violation] = field(default_factory=list)
    timing: dict[str, float] = field(default_factory=dict)
    checks_run: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations


def _check_bounds(g: Graph, mc: int) -> list[tuple[str, str]]:
    out = []
    n, m = g.n, g.m
    if n < 2:
        return out
    chi = chromatic_number(g)
    if not (m - n + 2 <= mc <= m - n + chi):
        out.append((f"{m-n+2} <= mc <= {m-n+chi}", f"mc={mc}"))
    if not g.is_complete():
        k = vertex_connectivity(g)
        if mc > m - n + k + 1:
            out.append((f"mc <= m-n+kappa+1 = {m-n+k+1}", f"mc={mc}"))
    return out


def _check_fastpaths(g: Graph, mc: int) -> list[tuple[str, str]]:
    if g.n < 3:
        return []
    rule = quick_floor(g)
    if rule is not None and mc != g.m - g.n + 2:
        return [(f"mc = m-n+2 = {g.m-g.n+2} ({rule})", f"mc={mc}")]
    return []


def _check_thm21(g: Graph, mc: int) -> list[tuple[str, str]]:
    k = vertex_connectivity(g)
    if k < 2:
        return []
    n, m = g.n, g.m
    wa = recognize_family_a(g, k)
    wpc = recognize_perfectly_connected(g, k)
    for w in (wa, wpc):
        if w is not None:
            validate_witness(g, w)
    fires = wa is not None or wpc is not None
    if (mc == m - n + k + 1) != fires:
        return [(f"mc = m-n+k+1 = {m-n+k+1} iff clique-join or perfectly-connected",
                 f"mc={mc}, recognizer fired={fires}")]
    return []


def _check_thm24(g: Graph, mc: int) -> list[tuple[str, str]]:
    k = vertex_connectivity(g)
    if k < 3:
        return []
    n, m = g.n, g.m
    wb = recognize_family_b(g, k)
    if wb is not None:
        validate_witness(g, wb)
    if (mc == m - n + k) != (wb is not None):
        return [(f"mc = m-n+k = {m-n+k} iff one of the three join families",
                 f"mc={mc}, recognizer fired={wb is not None}")]
    return []


def _check_prop13(g: Graph, mc: int) -> list[tuple[str, str]]:
    n, m = g.n, g.m
    s = min_degree(g)
    w = recognize_perfectly_connected(g, s)
    if w is not None:
        validate_witness(g, w)
        if mc != m - n + s + 1:
            return [(f"mc = m-n+s+1 = {m-n+s+1} (perfectly connected, s={s})",
                     f"mc={mc}")]
    else:
        if n >= 2 and mc > m - n + s:
            return [(f"mc <= m-n+s = {m-n+s} (not perfectly connected, s={s})",
                     f"mc={mc}")]
    return []


def _check_planar_table(g: Graph, mc: int) -> list[tuple[str, str]]:
    out = []
    n, m = g.n, g.m
    c = classify(g)
    if isinstance(c.verdict, Exact):
        if c.verdict.value != mc:
            out.append((f"classify exact = mc = {mc}",
                        f"classify={c.verdict.value} ({c.verdict.rule})"))
    else:
        if not (c.verdict.lower <= mc <= c.verdict.upper):
            out.append((f"mc within [{c.verdict.lower}, {c.verdict.upper}]",
                        f"mc={mc}"))
    if c.planar:
        if isinstance(c.verdict, BoundsVerdict):
            out.append(("planar graphs classify exactly", "bounds verdict"))
        if mc > m - n + 4:
            out.append((f"planar ceiling mc <= m-n+4 = {m-n+4}", f"mc={mc}"))
        top = "K2vP" in special_join_kinds(g)
        if (mc == m - n + 4) != top:
            out.append((f"mc = m-n+4 = {m-n+4} iff an edge joined to a path",
                        f"mc={mc}, shape={top}"))
    return out


def _check_constructions(g: Graph, mc: int) -> list[tuple[str, str]]:
    n, m = g.n, g.m
    c = classify(g)
    if not isinstance(c.verdict, Exact):
        return []
    if c.verdict.witness is not None:
        coloring = construct_coloring(g, c.verdict.witness)
    elif g.is_complete() or n <= 2:
        coloring = None  # all-trivial coloring is immediate
    else:
        coloring = spanning_tree_coloring(g)
    if coloring is None:
        return []
    report = verify_coloring(g, coloring)
    if not report.valid or report.colors_used != c.verdict.value:
        return [(f"constructed coloring valid with {c.verdict.value} colors",
                 f"valid={report.valid}, colors={report.colors_used}, "
                 f"reason={report.failing_reason}")]
    return []


def _check_oracle(g: Graph, mc: int) -> list[tuple[str, str]]:
    if g.m > ORACLE_EDGE_CAP:
        return []
    unrestricted = mc_exact_unrestricted(g).mc
    if unrestricted != mc:
        return [(f"unrestricted partition optimum = {mc}", f"{unrestricted}")]
    return []


_CHECK_FUNCS = {
    "bounds": _check_bounds,
    "fastpaths": _check_fastpaths,
    "thm21": _check_thm21,
    "thm24": _check_thm24,
    "prop13": _check_prop13,
    "planar-table": _check_planar_table,
    "constructions": _check_constructions,
    "oracle": _check_oracle,
}


def _evaluate_line(args) -> tuple[int, str, Optional[bool], list, dict]:
    """Worker: returns (index, line, parsed_ok, violations, timings)."""
    index, line, checks, max_n, node_budget = args
    timings: dict[str, float] = {}
    violations: list[Violation] = []
    try:
        g = parse_graph6(line)
    except (Graph6Error, ValueError) as exc:
        violations.append(Violation(line, "format", "a graph6 line", str(exc)))
        return index, line, None, violations, timings
    if g.n > max_n:
        return index, line, False, violations, timings
    if not g.is_connected():
        violations.append(Violation(line, "format", "a connected graph",
                                    "disconnected input"))
        return index, line, None, violations, timings
    t0 = time.perf_counter()
    try:
        result = mc_exact(g, SearchOptions(node_budget=node_budget))
    except NodeBudgetExceeded as exc:
        violations.append(Violation(line, "budget", "solver within node budget",
                                    str(exc)))
        return index, line, True, violations, timings
    timings["solver"] = time.perf_counter() - t0
    report = verify_coloring(g, result.witness)
    if not report.valid or report.colors_used != result.mc:
        violations.append(Violation(line, "bounds", "solver witness verifies",
                                    f"valid={report.valid}"))
    for name in CHECK_ORDER:
        if name in ("format", "budget") or name not in checks:
            continue
        t0 = time.perf_counter()
        for expected, actual in _CHECK_FUNCS[name](g, result.mc):
            violations.append(Violation(line, name, expected, actual))
        timings[name] = timings.get(name, 0.0) + time.perf_counter() - t0
    return index, line, True, violations, timings


def run_corpus(lines: Iterable[str], checks: Optional[Iterable[str]] = None,
               max_n: int = 10, jobs: int = 1,
               node_budget: int = SearchOptions().node_budget) -> CorpusReport:
    """Evaluate the enabled checks on every graph of a graph6 line stream."""
    if checks is None:
        selected = set(CHECK_ORDER)
    else:
        selected = set(checks)
        unknown = selected - ALL_CHECKS
        if unknown:
            raise ValueError(f"unknown checks: {sorted(unknown)}")
    work = [(i, line.strip(), frozenset(selected), max_n, node_budget)
            for i, line in enumerate(lines) if line.strip()]
    report = CorpusReport(checks_run=tuple(c for c in CHECK_ORDER if c in selected))

    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_evaluate_line, work, chunksize=16))
    else:
        results = [_evaluate_line(item) for item in work]

    results.sort(key=lambda r: r[0])
    order = {name: i for i, name in enumerate(CHECK_ORDER + ("budget",))}
    for index, line, parsed, violations, timings in results:
        if parsed is None:
            pass  # parse failures are not counted as processed
        elif parsed is False:
            report.skipped += 1
        else:
            report.graphs_processed += 1
        report.violations.extend(
            sorted(violations, key=lambda v: order.get(v.check, 99)))
        for name, dt in timings.items():
            report.timing[name] = report.timing.get(name, 0.0) + dt
    return report
