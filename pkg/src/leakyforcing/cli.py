"""Command-line front end.

Usage:
  leakyforcing closure GRAPH --blue 0 [--leaks 1]
  leakyforcing verify GRAPH --blue 0,1 --l 1 [--method both]
  leakyforcing solve GRAPH --l 1 [--jobs 4]
  leakyforcing family grid 8 13 --l 1 --construct --verify
  leakyforcing sweep --enumerate 6 --checks delete --l 1 [--json | --csv]

GRAPH is a file (edge list or graph6), a family expression such as
``grid:4,5`` or ``tree:12``, or a literal graph6 string.

Exit codes: 0 accepted / all checks pass, 1 rejected / some check failed,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from typing import Optional

from .corpus import CHECKS, enumerate_graphs, read_corpus, sweep
from .families import (FamilyError, FamilySpec, UnknownValue, generate,
                       grid_one_leaky_set, leaves_of, predicted_value, supertriangle_leaky_set,
                       tree_leaky_set)
from .forcing import ForcingError, chains, run_process
from .graph import Graph, GraphError, emit_graph6, members, parse_edge_list, parse_graph6, vset
from .leaky import (LeakyError, verify_leaky_adversary, verify_leaky_characterization)
from .solver import SolverError, all_minimum_leaky_sets, leaky_forcing_number

EXIT_OK, EXIT_REJECT, EXIT_USAGE = 0, 1, 2

SWEEP_DEFAULT_CHECKS = ("ineq", "max", "minimum", "lower", "kab", "cycle", "minusone", "delete",
                        "independent")

_EDGE_LIST_HEAD = re.compile(r"^\d+\s")


class UsageError(ValueError):
    pass


def _looks_like_edge_list(text: str) -> bool:
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            return bool(_EDGE_LIST_HEAD.match(line))
    return False


def _family_expr(expr: str, seed: Optional[int]) -> FamilySpec:
    name, _, rest = expr.partition(":")
    params = tuple(int(p) for p in rest.split(",") if p.strip()) if rest else ()
    return FamilySpec(name, params, seed)


def load_graph(source: str, fmt: str = "auto", seed: Optional[int] = None,
               width: Optional[int] = None) -> Graph:
    """Resolve a file path, ``family:params`` expression or graph6 literal."""
    if os.path.isfile(source):
        with open(source, encoding="utf-8") as fh:
            text = fh.read()
        if fmt == "auto":
            fmt = "edges" if _looks_like_edge_list(text) else "graph6"
        if fmt == "edges":
            return parse_edge_list(text, width=width)
        lines = [x.strip() for x in text.splitlines() if x.strip()]
        if not lines:
            raise UsageError(f"{source}: empty file")
        return parse_graph6(lines[0])
    if fmt == "edges":
        raise UsageError(f"{source}: no such file")
    if ":" in source:
        return generate(_family_expr(source, seed))
    return parse_graph6(source)


def parse_vertices(g: Graph, text: Optional[str]) -> int:
    """Comma separated vertex indices or labels."""
    if not text:
        return 0
    by_label = {}
    if g.labels is not None:
        by_label = {lab: v for v, lab in enumerate(g.labels)}
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            continue
        if tok in by_label:
            out.append(by_label[tok])
        elif tok.lstrip("-").isdigit():
            v = int(tok)
            if not 0 <= v < g.n:
                raise UsageError(f"vertex {v} outside 0..{g.n - 1}")
            out.append(v)
        else:
            raise UsageError(f"unknown vertex {tok!r}")
    return vset(out)


def _fmt_set(mask: int) -> str:
    return "{" + ", ".join(str(v) for v in members(mask)) + "}"


def _emit(obj: dict) -> None:
    print(json.dumps(obj))


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_closure(args) -> int:
    g = _graph(args)
    blue = parse_vertices(g, args.blue)
    leaks = parse_vertices(g, args.leaks)
    p = run_process(g, blue, leaks)
    ch = chains(p)
    if args.json:
        _emit({"final": members(p.final), "size": p.final.bit_count(), "n": g.n,
               "complete": p.final == g.vertices,
               "steps": [[f.source, f.target] for f in p.steps],
               "chains": [list(c.vertices) for c in ch]})
    else:
        print(f"closure: {_fmt_set(p.final)} ({p.final.bit_count()}/{g.n})")
        print("steps: " + ",".join(str(f) for f in p.steps))
        print("chains: " + " ".join("->".join(map(str, c.vertices)) for c in ch))
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _graph(args)
    blue = parse_vertices(g, args.blue)
    if not 0 <= args.l <= g.n:
        raise UsageError(f"--l must lie in 0..{g.n}")
    verdicts = []
    if args.method in ("adversary", "both"):
        verdicts.append(verify_leaky_adversary(g, blue, args.l, jobs=args.jobs))
    if args.method in ("characterization", "both"):
        verdicts.append(verify_leaky_characterization(g, blue, args.l))
    accepted = verdicts[0].accepted
    agree = all(v.accepted == accepted for v in verdicts)
    out = {"accepted": accepted, "l": args.l, "witness": verdicts[0].to_dict()["witness"],
           "method": args.method}
    if args.method == "both":
        out["methods"] = [v.to_dict() for v in verdicts]
        out["agree"] = agree
    if not accepted and g.labels is not None:
        out["witness_labels"] = [g.label(v) for v in members(verdicts[0].witness)]
    _emit(out)
    if not agree:
        print("error: verifiers disagree", file=sys.stderr)
        return EXIT_REJECT
    return EXIT_OK if accepted else EXIT_REJECT


def cmd_solve(args) -> int:
    g = _graph(args)
    res = leaky_forcing_number(g, args.l, prune=not args.exhaustive, max_n=args.max_n,
                               jobs=args.jobs)
    _emit(res.to_dict(g))
    return EXIT_OK


def _construct(spec: FamilySpec, g: Graph, l: int) -> int:  # noqa: E741
    if spec.name == "grid":
        n, m = spec.params
        if l != 1:
            raise UsageError("grid construction is for --l 1")
        if n <= m:
            return grid_one_leaky_set(n, m, check=False)
        # transpose: (r, c) in n x m is (c, r) in m x n
        t = grid_one_leaky_set(m, n, check=False)
        return vset((v % n) * m + v // n for v in members(t))
    if spec.name == "supertriangle":
        return supertriangle_leaky_set(spec.params[0], l)
    if spec.name in ("tree", "star", "spider", "path"):
        return tree_leaky_set(g, l)
    if spec.name == "clique_with_leaves":
        if l != spec.params[0]:
            raise UsageError("clique_with_leaves construction needs --l equal to its parameter")
        return leaves_of(g)
    return leaky_forcing_number(g, l).witness


def cmd_family(args) -> int:
    name = args.name
    params = list(args.params)
    if name == "tree" and args.size is not None:
        params = [args.size]
    spec = FamilySpec(name, tuple(params), args.seed)
    g = generate(spec)
    out = {"family": spec.name, "params": list(spec.params), "n": g.n,
           "m": g.num_edges(), "l": args.l}
    if spec.name == "tree":
        out["seed"] = spec.seed if spec.seed is not None else 0
        print(f"seed: {out['seed']}", file=sys.stderr)
    out["graph6"] = emit_graph6(g) if g.n <= 62 else None
    try:
        out["predicted"] = predicted_value(spec, args.l)
    except UnknownValue:
        out["predicted"] = None
    status = EXIT_OK
    if args.construct or args.verify:
        blue = _construct(spec, g, args.l)
        out["set"] = members(blue)
        out["size"] = blue.bit_count()
        if g.labels is not None:
            out["labels"] = [g.label(v) for v in members(blue)]
        if args.verify:
            v = verify_leaky_characterization(g, blue, args.l)
            out["verdict"] = v.to_dict()
            if args.adversary:
                a = verify_leaky_adversary(g, blue, args.l, jobs=args.jobs)
                out["adversary"] = a.to_dict()
                if a.accepted != v.accepted:
                    print("error: verifiers disagree", file=sys.stderr)
                    status = EXIT_REJECT
            if not v.accepted:
                status = EXIT_REJECT
    if spec.name == "clique_with_leaves" or args.minimum:
        sets = all_minimum_leaky_sets(g, args.l, max_n=args.max_n)
        out["minimum_sets"] = [members(b) for b in sets]
        out["unique"] = len(sets) == 1
    _emit(out)
    return status


def cmd_sweep(args) -> int:
    if (args.corpus is None) == (args.enumerate is None):
        raise UsageError("give exactly one of --corpus or --enumerate")
    checks = tuple(c.strip() for c in args.checks.split(",") if c.strip())
    unknown = [c for c in checks if c not in CHECKS]
    if unknown:
        raise UsageError(f"unknown checks: {', '.join(unknown)}")
    if args.enumerate is not None:
        if not 1 <= args.enumerate <= 7:
            raise UsageError("--enumerate needs 1 <= N <= 7")
        graphs = enumerate_graphs(args.enumerate, connected=True, min_n=args.min_n)
        corpus = f"connected<= {args.enumerate}"
    else:
        graphs = read_corpus(args.corpus)
        corpus = args.corpus
    report = sweep(graphs, args.l, checks, corpus=corpus, jobs=args.jobs)
    if args.json:
        print(report.to_json())
    elif args.csv:
        sys.stdout.write(report.to_csv())
    else:
        s = report.summary
        print(f"corpus: {corpus}  graphs: {s['graphs']}  l: {args.l}")
        print("  by order: " + ", ".join(f"n={k}: {v}" for k, v in s["by_n"].items()))
        for c in checks:
            k = s["checks"][c]
            print(f"  {c:12s} pass {k['pass']:5d}  fail {k['fail']:3d}  n/a {k['n/a']:5d}")
        if report.delta_witnesses:
            lo = min(report.delta_witnesses)
            print(f"  Z1 edge-deletion deltas: {sorted(report.delta_witnesses)} (min {lo})")
            for d, w in sorted(report.delta_witnesses.items()):
                print(f"    {d:+d}: {w['graph6']} edge {tuple(w['edge'])}")
        for f in report.failures:
            print(f"  FAIL {f['check']}: {f['graph6']} {f['detail']}")
    return EXIT_OK if report.ok else EXIT_REJECT


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _graph(args) -> Graph:
    return load_graph(args.graph, args.format, args.seed, args.width)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="leakyforcing",
                                 description="Zero forcing and leaky forcing on small graphs.")
    sub = ap.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--json", action="store_true")
    common.add_argument("--seed", type=int, default=None)

    graph = argparse.ArgumentParser(add_help=False)
    graph.add_argument("graph", help="file, family:params, or graph6 string")
    graph.add_argument("--format", choices=("auto", "edges", "graph6"), default="auto")
    graph.add_argument("--width", type=int, default=None,
                       help="vertex limit for edge-list input (default 64)")

    p = sub.add_parser("closure", parents=[common, graph], help="closure and forcing process")
    p.add_argument("--blue", required=True)
    p.add_argument("--leaks", default="")
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("verify", parents=[common, graph], help="is the blue set l-leaky")
    p.add_argument("--blue", required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--method", choices=("adversary", "characterization", "both"),
                   default="adversary")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("solve", parents=[common, graph], help="exact Z_l with witness")
    p.add_argument("--l", type=int, default=0)
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--exhaustive", action="store_true", help="disable pruning")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("family", parents=[common], help="family member, construction, verdict")
    p.add_argument("name")
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--l", type=int, default=1)
    p.add_argument("--size", type=int, default=None, help="vertex count for random trees")
    p.add_argument("--construct", action="store_true")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--adversary", action="store_true",
                   help="also run the exhaustive adversary verifier")
    p.add_argument("--minimum", action="store_true", help="list every minimum l-leaky set")
    p.add_argument("--max-n", type=int, default=None)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("sweep", parents=[common], help="theorem battery over a corpus")
    p.add_argument("--corpus", default=None, help="graph6 file, one graph per line")
    p.add_argument("--enumerate", type=int, default=None, metavar="N")
    p.add_argument("--min-n", type=int, default=1)
    p.add_argument("--checks", default=",".join(SWEEP_DEFAULT_CHECKS))
    p.add_argument("--l", type=int, default=1)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_sweep)
    return ap


def main(argv: Optional[list[str]] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.jobs < 1:
        ap.error("--jobs must be positive")
    try:
        return args.func(args)
    except (UsageError, GraphError, FamilyError, ForcingError, LeakyError, SolverError,
            ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
