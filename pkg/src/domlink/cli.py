"""Command-line surface.

Graphs are given as graph6 strings, as @file (auto-detected graph6 or
edge-list content), or as conventional names (K7, C12, K3,3,1,
petersen, prism).  Reports are line-oriented text or, with --json, a
single JSON object.  Exit codes: 0 success, 1 requested property absent
(--expect mismatch), 2 usage or parse error, 3 internal invariant
violation (theorem falsification; must never occur).
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .compliance import (TheoremFalsificationError, compliance_by_minor,
                         compute_f, is_k_compliant, verify_one_of_three)
from .constructions import named, paley, twin_add
from .domination import gamma_c
from .graph import Graph, vertex_list
from .graphio import GraphParseError, emit_graph6, parse_graph, parse_graph6
from .search import SearchSpec, search_non_compliant
from .topology import UNKNOWN, has_minor, il_witness, is_ik_sufficient, saturate_nil
from . import verify as verify_mod

EXIT_OK = 0
EXIT_ABSENT = 1
EXIT_USAGE = 2
EXIT_FALSIFIED = 3


def _load_graph(token: str) -> Graph:
    if token.startswith("@"):
        with open(token[1:]) as fh:
            return parse_graph(fh.read())
    try:
        return named(token)
    except ValueError:
        pass
    return parse_graph6(token)


class _Report:
    """Collects verdicts/witnesses; renders text lines or one JSON object."""

    def __init__(self, command: str, inputs: dict):
        self.command = command
        self.inputs = inputs
        self.verdicts: list[dict] = []
        self.witnesses: list[dict] = []
        self.start = time.perf_counter()

    def verdict(self, name: str, value) -> None:
        self.verdicts.append({"name": name, "value": value})

    def witness(self, kind: str, **fields) -> None:
        self.witnesses.append({"type": kind, **fields})

    def emit(self, as_json: bool) -> None:
        if as_json:
            payload = {
                "command": self.command,
                "inputs": self.inputs,
                "verdicts": self.verdicts,
                "witnesses": self.witnesses,
                "timing": {"seconds": round(time.perf_counter() - self.start, 6)},
            }
            print(json.dumps(payload, sort_keys=True))
        else:
            for v in self.verdicts:
                print(f"{v['name']}: {v['value']}")
            for w in self.witnesses:
                rest = {k: v for k, v in w.items() if k != "type"}
                print(f"witness[{w['type']}]: {json.dumps(rest, sort_keys=True)}")


def _gamma_value(value) -> str | int:
    return "infinite" if value == float("inf") else int(value)


def _cmd_gammac(args) -> int:
    g = _load_graph(args.graph)
    res = gamma_c(g)
    rep = _Report("gammac", {"graph": emit_graph6(g)})
    rep.verdict("gamma_c", _gamma_value(res.value))
    if res.witness is not None:
        rep.witness("connected-dominating-set", vertices=vertex_list(res.witness))
    rep.emit(args.json)
    return EXIT_OK


def _cmd_comply(args) -> int:
    g = _load_graph(args.graph)
    report = is_k_compliant(g, args.k)
    rep = _Report("comply", {"graph": emit_graph6(g), "k": args.k})
    verdict = "compliant" if report.compliant else "non-compliant"
    rep.verdict("verdict", verdict)
    rep.verdict("min_k", report.min_k)
    if report.compliant:
        rep.verdict("side", report.side)
        rep.witness("connected-dominating-set", side=report.side,
                    vertices=vertex_list(report.witness))
    if args.oracle:
        oracle = compliance_by_minor(g, args.k)
        rep.verdict("minor_route", "compliant" if oracle.compliant else "non-compliant")
        rep.verdict("routes_agree", oracle.compliant == report.compliant)
        if oracle.compliant != report.compliant:
            raise TheoremFalsificationError("domination and minor routes disagree")
    rep.emit(args.json)
    if args.expect and args.expect != verdict:
        return EXIT_ABSENT
    return EXIT_OK


def _cmd_paley(args) -> int:
    g = paley(args.q)
    rep = _Report("paley", {"q": args.q})
    rep.verdict("graph6", emit_graph6(g))
    rep.emit(args.json)
    return EXIT_OK


def _cmd_twin(args) -> int:
    g = _load_graph(args.graph)
    h = twin_add(g, args.vertex, closed=args.closed)
    rep = _Report("twin", {"graph": emit_graph6(g), "vertex": args.vertex,
                           "closed": args.closed})
    rep.verdict("graph6", emit_graph6(h))
    rep.emit(args.json)
    return EXIT_OK


def _cmd_minor(args) -> int:
    target = _load_graph(args.target)
    host = _load_graph(args.graph)
    res = has_minor(host, target, budget=args.budget)
    rep = _Report("minor", {"target": emit_graph6(target), "graph": emit_graph6(host)})
    if res is UNKNOWN:
        rep.verdict("minor", "unknown")
        found = None
    elif res is None:
        rep.verdict("minor", "absent")
        found = False
    else:
        rep.verdict("minor", "present")
        rep.witness("branch-sets", sets=[vertex_list(m) for m in res.branch_sets])
        found = True
    rep.emit(args.json)
    if args.expect:
        want = args.expect == "present"
        if found is None or found != want:
            return EXIT_ABSENT
    return EXIT_OK


def _cmd_il(args) -> int:
    g = _load_graph(args.graph)
    found = il_witness(g)
    rep = _Report("il", {"graph": emit_graph6(g)})
    rep.verdict("intrinsically_linked", found is not None)
    if found is not None:
        member, witness = found
        rep.witness("petersen-family-minor", member=emit_graph6(member),
                    sets=[vertex_list(m) for m in witness.branch_sets])
    rep.emit(args.json)
    if args.expect:
        want = args.expect == "yes"
        if (found is not None) != want:
            return EXIT_ABSENT
    return EXIT_OK


def _cmd_ik(args) -> int:
    g = _load_graph(args.graph)
    status = is_ik_sufficient(g)
    rep = _Report("ik", {"graph": emit_graph6(g)})
    rep.verdict("status", status.value)
    rep.emit(args.json)
    if args.expect and args.expect == "yes" and status.name == "UNKNOWN":
        return EXIT_ABSENT
    return EXIT_OK


def _cmd_petersen_family(args) -> int:
    from .topology import petersen_family

    rep = _Report("petersen-family", {})
    for g in petersen_family():
        rep.verdict(f"member-n{g.n}", emit_graph6(g))
    rep.emit(args.json)
    return EXIT_OK


def _cmd_fn(args) -> int:
    value, extremal = compute_f(args.n, long_running=args.long, workers=args.threads)
    rep = _Report("fn", {"n": args.n})
    rep.verdict(f"f({args.n})", value)
    rep.verdict("least_universal_k", args.n - value)
    rep.witness("extremal-graph", graph6=emit_graph6(extremal))
    rep.emit(args.json)
    return EXIT_OK


def _cmd_search(args) -> int:
    with open(args.specfile) as fh:
        raw = json.load(fh)
    inject = tuple(parse_graph6(s) for s in raw.pop("inject", []))
    candidates = tuple(parse_graph6(s) for s in raw.pop("candidates", []))
    if "edges" in raw and raw["edges"] is not None:
        raw["edges"] = tuple(raw["edges"])
    if "filters" in raw:
        raw["filters"] = tuple(raw["filters"])
    spec = SearchSpec(inject=inject, candidates=candidates, **raw)
    result = search_non_compliant(spec, long_running=args.long,
                                  checkpoint=args.checkpoint)
    rep = _Report("search", {"specfile": args.specfile, "spec": spec.digest(),
                             "seed": spec.seed})
    rep.verdict("examined", result.examined)
    rep.verdict("filter_survivors", result.survivors)
    rep.verdict("non_compliant", len(result.records))
    for g, rp in result.records:
        rep.witness("non-compliant-graph", graph6=emit_graph6(g), min_k=rp.min_k)
    rep.emit(args.json)
    return EXIT_OK


def _cmd_saturate(args) -> int:
    g = _load_graph(args.graph)
    h = saturate_nil(g)
    rep = _Report("saturate", {"graph": emit_graph6(g)})
    rep.verdict("graph6", emit_graph6(h))
    rep.verdict("edges_added", h.edge_count - g.edge_count)
    rep.emit(args.json)
    return EXIT_OK


def _cmd_verify(args) -> int:
    results = verify_mod.run_all()
    if args.long:
        start = time.perf_counter()
        value, _ = compute_f(8, long_running=True, workers=args.threads)
        print(f"[INFO] long-running extra: f(8)={value} "
              f"({time.perf_counter() - start:.1f}s)")
    failed = [r for r in results if not r.ok]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return EXIT_OK if not failed else EXIT_ABSENT


def _add_graph_arg(p: argparse.ArgumentParser) -> None:
    p.add_argument("graph", help="graph6 string, @file, or a name like K7/C12/petersen")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="domlink", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("--json", action="store_true", help="emit one JSON report object")
        p.set_defaults(handler=fn)
        return p

    p = add("gammac", _cmd_gammac, help="connected domination number")
    _add_graph_arg(p)

    p = add("comply", _cmd_comply, help="k-compliance test")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--oracle", action="store_true",
                   help="cross-check with the minor-route oracle")
    p.add_argument("--expect", choices=["compliant", "non-compliant"])
    _add_graph_arg(p)

    p = add("paley", _cmd_paley, help="quadratic-residue graph")
    p.add_argument("q", type=int)

    p = add("twin", _cmd_twin, help="add a twin vertex")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--open", dest="closed", action="store_false")
    mode.add_argument("--closed", dest="closed", action="store_true")
    p.add_argument("vertex", type=int)
    _add_graph_arg(p)

    p = add("minor", _cmd_minor, help="minor containment with witness")
    p.add_argument("target", help="target graph (same formats)")
    p.add_argument("--budget", type=int, default=None,
                   help="search node budget; exhaustion reports 'unknown'")
    p.add_argument("--expect", choices=["present", "absent"])
    _add_graph_arg(p)

    p = add("il", _cmd_il, help="intrinsic linking test")
    p.add_argument("--expect", choices=["yes", "no"])
    _add_graph_arg(p)

    p = add("ik", _cmd_ik, help="sufficient-condition intrinsic knotting test")
    p.add_argument("--expect", choices=["yes", "no"])
    _add_graph_arg(p)

    add("petersen-family", _cmd_petersen_family, help="the seven family graphs")

    p = add("fn", _cmd_fn, help="exhaustive f(n) with extremal graph")
    p.add_argument("n", type=int)
    p.add_argument("--long", action="store_true", help="allow the n=8 scan")
    p.add_argument("--threads", type=int, default=1)

    p = add("search", _cmd_search, help="run a JSON search spec")
    p.add_argument("specfile")
    p.add_argument("--long", action="store_true",
                   help="allow exhaustive runs at order >= 13")
    p.add_argument("--checkpoint", default=None)

    p = add("saturate", _cmd_saturate, help="extend a linkless graph to edge-maximal")
    _add_graph_arg(p)

    p = add("verify", _cmd_verify, help="run the full reproduction battery")
    p.add_argument("--long", action="store_true", help="include the f(8) scan")
    p.add_argument("--threads", type=int, default=1)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except TheoremFalsificationError as exc:
        print(f"theorem falsification: {exc}", file=sys.stderr)
        return EXIT_FALSIFIED
    except (GraphParseError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
