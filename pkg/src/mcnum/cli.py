"""Command-line interface: exact | classify | color | verify | corpus.

Every command emits line-delimited JSON records with a stable field order,
so corpus reports are byte-identical across runs and worker counts.  Exit
codes: 0 success / all checks passed, 1 at least one violation or invalid
coloring or unrecognized input graph, 2 usage or format errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import asdict
from pathlib import Path
from typing import Optional

from .graph import Graph, Graph6Error, GraphTooLargeError, parse_graph6
from .solver import (MCColoring, NodeBudgetExceeded, SearchOptions, mc_exact,
                     verify_coloring)
from .structure import DisconnectedGraphError, min_degree, vertex_connectivity
from .classifier import BoundsVerdict, Exact, classify, construct_coloring
from .families import (FamilyA, FamilyB1, FamilyB2, FamilyB3, FamilyWitness,
                       P1, P2, PerfectlyConnected, SpecialJoin,
                       recognize_family_a, recognize_family_b,
                       recognize_p1, recognize_p2,
                       recognize_perfectly_connected, recognize_special_join)
from .corpus import CHECK_ORDER, run_corpus

ENV_NODE_BUDGET = "MCNUM_NODE_BUDGET"


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # keep usage failures inside execute_command
        raise _UsageError(message)


def witness_to_dict(w: Optional[FamilyWitness]) -> Optional[dict]:
    if w is None:
        return None
    if isinstance(w, PerfectlyConnected):
        return {"family": "perfectly-connected", "v": w.v,
                "parts": [sorted(p) for p in w.parts], "s": w.s}
    if isinstance(w, FamilyA):
        return {"family": "family-a", "clique": sorted(w.clique),
                "h_vertices": sorted(w.h_vertices), "h_cut_vertex": w.h_cut_vertex}
    if isinstance(w, FamilyB1):
        return {"family": "family-b1", "u": w.u,
                "parts": [sorted(p) for p in w.parts], "t": w.t}
    if isinstance(w, FamilyB2):
        return {"family": "family-b2", "u_set": sorted(w.u_set),
                "v_set": sorted(w.v_set)}
    if isinstance(w, FamilyB3):
        return {"family": "family-b3", "u_set": sorted(w.u_set),
                "missing_pair": sorted(w.missing_pair), "v_set": sorted(w.v_set)}
    if isinstance(w, P1):
        return {"family": "p1", "apex": w.apex, "h_vertices": sorted(w.h_vertices)}
    if isinstance(w, P2):
        return {"family": "p2", "apex": w.apex, "h_vertices": sorted(w.h_vertices)}
    if isinstance(w, SpecialJoin):
        return {"family": "special-join", "kind": w.kind,
                "a_set": sorted(w.a_set), "spine": list(w.spine)}
    raise ValueError(f"unknown witness type {type(w).__name__}")


def _node_budget(cli_value: Optional[int]) -> int:
    if cli_value is not None:
        return cli_value
    env = os.environ.get(ENV_NODE_BUDGET)
    if env:
        return int(env)
    return SearchOptions().node_budget


def _input_graphs(args) -> list[str]:
    if args.file:
        return [ln for ln in Path(args.file).read_text().splitlines() if ln.strip()]
    if args.graph6 is None:
        raise _UsageError("a graph6 string or -f FILE is required")
    return [args.graph6]


def _cmd_exact(args, out: list[str]) -> int:
    budget = _node_budget(args.node_budget)
    code = 0
    for line in _input_graphs(args):
        g = parse_graph6(line)
        try:
            result = mc_exact(g, SearchOptions(node_budget=budget))
        except NodeBudgetExceeded as exc:
            out.append(json.dumps({"cmd": "exact", "graph6": line.strip(),
                                   "error": str(exc)}))
            code = 1
            continue
        record = {"cmd": "exact", "graph6": line.strip(), "n": g.n, "m": g.m,
                  "mc": result.mc, "waste": result.witness.waste,
                  "nodes": result.nodes_explored,
                  "classes": [[list(e) for e in cl]
                              for cl in result.witness.classes]}
        out.append(json.dumps(record))
    return code


def _cmd_classify(args, out: list[str]) -> int:
    for line in _input_graphs(args):
        g = parse_graph6(line)
        c = classify(g)
        record = {"cmd": "classify", "graph6": line.strip(), "n": g.n, "m": g.m,
                  "kappa": c.kappa, "planar": c.planar}
        if isinstance(c.verdict, Exact):
            record.update(verdict="exact", value=c.verdict.value,
                          formula=c.verdict.formula, rule=c.verdict.rule,
                          witness=witness_to_dict(c.verdict.witness))
        else:
            record.update(verdict="bounds", lower=c.verdict.lower,
                          upper=c.verdict.upper, rules=list(c.verdict.rules))
        out.append(json.dumps(record))
    return 0


def _first_family_witness(g: Graph) -> Optional[FamilyWitness]:
    """Recognizers in classifier precedence; first witness wins."""
    w = recognize_perfectly_connected(g, min_degree(g))
    if w is not None:
        return w
    k = vertex_connectivity(g)
    if k >= 2:
        w = recognize_family_a(g, k)
        if w is not None:
            return w
        w = recognize_perfectly_connected(g, k)
        if w is not None:
            return w
    if k >= 3:
        w = recognize_family_b(g, k)
        if w is not None:
            return w
    for rec in (recognize_p1, recognize_p2, recognize_special_join):
        w = rec(g)
        if w is not None:
            return w
    return None


def _cmd_color(args, out: list[str]) -> int:
    g = parse_graph6(args.graph6)
    w = _first_family_witness(g)
    if w is None:
        out.append(json.dumps({"cmd": "color", "graph6": args.graph6.strip(),
                               "error": "no family recognizer fired"}))
        return 1
    coloring = construct_coloring(g, w)
    record = coloring.to_json_dict()
    record["witness"] = witness_to_dict(w)
    text = json.dumps(record)
    if args.out:
        Path(args.out).write_text(text + "\n")
    out.append(text)
    return 0


def _cmd_verify(args, out: list[str]) -> int:
    g = parse_graph6(args.graph)
    try:
        data = json.loads(Path(args.coloring).read_text())
        coloring = MCColoring.from_json_dict(data)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise _UsageError(f"unreadable coloring file: {exc}")
    report = verify_coloring(g, coloring)
    record = {"cmd": "verify", "graph6": args.graph.strip(),
              "valid": report.valid, "colors": report.colors_used,
              "waste": report.waste,
              "failing_pair": list(report.failing_pair) if report.failing_pair else None,
              "failing_reason": report.failing_reason}
    out.append(json.dumps(record))
    return 0 if report.valid else 1


def _cmd_corpus(args, out: list[str]) -> int:
    checks = None
    if args.checks:
        checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    lines = Path(args.file).read_text().splitlines()
    report = run_corpus(lines, checks=checks, max_n=args.max_n, jobs=args.jobs,
                        node_budget=_node_budget(args.node_budget))
    summary = {"cmd": "corpus", "graphs": report.graphs_processed,
               "skipped": report.skipped, "violations": len(report.violations),
               "checks": list(report.checks_run)}
    out.append(json.dumps(summary))
    for v in report.violations:
        out.append(json.dumps({"type": "violation", "graph6": v.graph6,
                               "check": v.check, "expected": v.expected,
                               "actual": v.actual}))
    if args.timing:
        for name in sorted(report.timing):
            out.append(json.dumps({"type": "timing", "check": name,
                                   "seconds": round(report.timing[name], 3)}))
    return 0 if report.ok else 1


def build_parser() -> _Parser:
    parser = _Parser(prog="mcnum", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("exact", help="exact mc-number with witness coloring")
    p.add_argument("graph6", nargs="?")
    p.add_argument("-f", "--file")
    p.add_argument("--node-budget", type=int)

    p = sub.add_parser("classify", help="classification with provenance")
    p.add_argument("graph6", nargs="?")
    p.add_argument("-f", "--file")

    p = sub.add_parser("color", help="extremal coloring for a recognized family")
    p.add_argument("graph6")
    p.add_argument("--out")

    p = sub.add_parser("verify", help="check a coloring file against a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--coloring", required=True)

    p = sub.add_parser("corpus", help="run the cross-validation checks on a file")
    p.add_argument("-f", "--file", required=True)
    p.add_argument("--checks", help="comma-separated subset of: " + ",".join(CHECK_ORDER))
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--node-budget", type=int)
    p.add_argument("--timing", action="store_true")
    return parser


def execute_command(argv: list[str]) -> dict:
    """Run one CLI invocation; returns {"exit_code": int, "stdout": str}."""
    out: list[str] = []
    try:
        args = build_parser().parse_args(argv)
        handler = {"exact": _cmd_exact, "classify": _cmd_classify,
                   "color": _cmd_color, "verify": _cmd_verify,
                   "corpus": _cmd_corpus}[args.command]
        code = handler(args, out)
    except _UsageError as exc:
        out.append(json.dumps({"error": f"usage: {exc}"}))
        code = 2
    except (Graph6Error, GraphTooLargeError) as exc:
        out.append(json.dumps({"error": f"format: {exc}"}))
        code = 2
    except (DisconnectedGraphError, ValueError) as exc:
        out.append(json.dumps({"error": str(exc)}))
        code = 2
    except OSError as exc:
        out.append(json.dumps({"error": f"input: {exc}"}))
        code = 2
    return {"exit_code": code, "stdout": "".join(s + "\n" for s in out)}


def main() -> None:
    result = execute_command(sys.argv[1:])
    sys.stdout.write(result["stdout"])
    sys.exit(result["exit_code"])


if __name__ == "__main__":
    main()
