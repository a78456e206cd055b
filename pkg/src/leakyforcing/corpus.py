"""Small-graph corpora: canonical forms, enumeration, and theorem sweeps."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations, product
from typing import Iterable

from .forcing import closure, reversal, run_process
from .graph import (Graph, delete_edge, delete_vertex, emit_graph6, is_connected, is_cycle,
                    is_path, members, parse_graph6, vset)
from .leaky import min_cut_endpoints
from .solver import classification_shape, leaky_forcing_number


# ---------------------------------------------------------------------------
# canonical form
# ---------------------------------------------------------------------------

def _refine(g: Graph) -> list[int]:
    """Isomorphism-invariant vertex colours by degree refinement."""
    colors = g.degrees()
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in members(g.adj[v]))))
                for v in range(g.n)]
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def _key(g: Graph, order: tuple[int, ...]) -> int:
    """Upper-triangle adjacency bits (graph6 order) with vertex order[i] at position i."""
    key = 0
    adj = g.adj
    for j in range(1, g.n):
        aj = adj[order[j]]
        for i in range(j):
            key = key << 1 | (aj >> order[i] & 1)
    return key


def canonical_form(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Minimum adjacency key over colour-respecting vertex orders.

    Vertices are grouped by refined colour and only orders that list colour
    classes in ascending colour are tried; since the colouring is invariant,
    the optimum over that restricted set is still a canonical form.  Returns
    the key and an optimal order.
    """
    if g.n <= 1:
        return 0, tuple(range(g.n))
    colors = _refine(g)
    classes = [[v for v in range(g.n) if colors[v] == c] for c in sorted(set(colors))]
    best = None
    best_order = None
    for parts in product(*(permutations(c) for c in classes)):
        order = tuple(v for part in parts for v in part)
        k = _key(g, order)
        if best is None or k < best:
            best, best_order = k, order
    return best, best_order


def canonical_graph(g: Graph) -> Graph:
    _, order = canonical_form(g)
    perm = [0] * g.n
    for pos, v in enumerate(order):
        perm[v] = pos
    return Graph(g.n, g.relabel(perm).adj)


def canonical_graph6(g: Graph) -> str:
    return emit_graph6(canonical_graph(g))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and canonical_form(g)[0] == canonical_form(h)[0]


@lru_cache(maxsize=None)
def _graphs6(n: int) -> tuple[str, ...]:
    if n == 0:
        return ("?",)
    if n == 1:
        return ("@",)
    seen = set()
    for line in _graphs6(n - 1):
        base = parse_graph6(line)
        for nb in range(1 << (n - 1)):
            adj = list(base.adj) + [nb]
            for u in members(nb):
                adj[u] |= 1 << (n - 1)
            seen.add(canonical_graph6(Graph(n, tuple(adj))))
    return tuple(sorted(seen))


def all_graphs(n: int, connected: bool = True) -> list[Graph]:
    """All graphs on ``n`` vertices up to isomorphism, in canonical graph6 order.

    Built by adding a vertex with every possible neighbourhood to each graph
    on ``n - 1`` vertices and keeping distinct canonical forms.
    """
    if n > 7:
        raise ValueError("enumeration is limited to n <= 7")
    out = [parse_graph6(s) for s in _graphs6(n)]
    if connected:
        out = [g for g in out if is_connected(g)]
    return out


def enumerate_graphs(max_n: int, connected: bool = True, min_n: int = 1) -> list[Graph]:
    out = []
    for n in range(min_n, max_n + 1):
        out.extend(all_graphs(n, connected))
    return out


def read_corpus(path: str) -> list[Graph]:
    with open(path) as fh:
        return [parse_graph6(line) for line in fh if line.strip()]


# ---------------------------------------------------------------------------
# theorem sweep
# ---------------------------------------------------------------------------

CHECKS = ("ineq", "max", "minimum", "lower", "kab", "cycle", "minusone", "delete",
          "independent", "reversal", "absorb")


@lru_cache(maxsize=None)
def _z(g6: str, l: int, prune: bool) -> int:  # noqa: E741
    g = parse_graph6(g6)
    return leaky_forcing_number(g, min(l, g.n), prune=prune, max_n=max(g.n, 1)).value


def zl(g: Graph, l: int, prune: bool = False) -> int:  # noqa: E741
    """``Z_l`` memoised on the canonical form, solved on the whole graph."""
    return _z(canonical_graph6(g), l, prune)


@dataclass
class SweepReport:
    corpus: str
    l: int  # noqa: E741
    checks: tuple
    records: list = field(default_factory=list)
    failures: list = field(default_factory=list)
    delta_witnesses: dict = field(default_factory=dict)

    @property
    def summary(self) -> dict:
        counts = {c: {"pass": 0, "fail": 0, "n/a": 0} for c in self.checks}
        for r in self.records:
            for c in self.checks:
                v = r["checks"].get(c)
                counts[c]["n/a" if v is None else "pass" if v else "fail"] += 1
        by_n: dict = {}
        for r in self.records:
            by_n[r["n"]] = by_n.get(r["n"], 0) + 1
        return {"graphs": len(self.records), "by_n": {str(k): v for k, v in sorted(by_n.items())},
                "checks": counts, "failures": len(self.failures)}

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {"corpus": self.corpus, "l": self.l, "checks": list(self.checks),
                "summary": self.summary, "failures": self.failures,
                "delta_witnesses": {str(k): v for k, v in sorted(self.delta_witnesses.items())},
                "records": self.records}

    def to_json(self, indent=None) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    def to_csv(self) -> str:
        zcols = [f"Z{i}" for i in range(self.l + 1)]
        lines = [",".join(["graph6", "n", "m"] + zcols + list(self.checks))]
        for r in self.records:
            row = [r["graph6"], str(r["n"]), str(r["m"])] + [str(z) for z in r["Z"]]
            for c in self.checks:
                v = r["checks"].get(c)
                row.append("" if v is None else "pass" if v else "fail")
            lines.append(",".join(row))
        return "\n".join(lines) + "\n"


def _resilient_levels(zs: list[int]) -> list[int]:
    return [i for i in range(1, len(zs)) if zs[i] == zs[0]]


def check_graph(g: Graph, l: int, checks: Iterable[str], prune: bool = False) -> dict:  # noqa: E741
    """Run the theorem battery on one graph.

    Returns a record with the forcing numbers ``Z_0..Z_l``, a pass/fail/None
    flag per check and the details of any failure.
    """
    checks = tuple(checks)
    n = g.n
    delta = g.max_degree()
    top = max(l, 1 if {"cycle", "delete", "reversal"} & set(checks) else 0)
    if "max" in checks:
        top = max(top, min(delta, n))
    zs = [zl(g, i, prune) for i in range(top + 1)]
    flags: dict = {}
    notes: dict = {}
    extra: dict = {}
    connected = is_connected(g)

    if "ineq" in checks:
        flags["ineq"] = all(zs[i] <= zs[i + 1] for i in range(l))

    if "max" in checks:
        bad = [i for i in range(1, top + 1) if (zs[i] == n) != (delta <= i)]
        flags["max"] = not bad
        if bad:
            notes["max"] = bad

    if "lower" in checks:
        bad = [i for i in range(2, min(l, n - 3) + 1) if zs[i] < i + 2]
        if connected and not is_path(g) and not is_cycle(g):
            bad += [i for i in range(0, min(l, 1, n - 3) + 1) if zs[i] < i + 2]
        flags["lower"] = not bad
        if bad:
            notes["lower"] = sorted(bad)

    if "cycle" in checks:
        if connected and n >= 2:
            lhs = zs[1] == 2
            rhs = (is_cycle(g) and zs[0] == 2) or (is_path(g) and zs[0] == 1)
            flags["cycle"] = lhs == rhs
        else:
            flags["cycle"] = None

    resilient = [i for i in _resilient_levels(zs[:l + 1])] if n >= 2 else []

    if "minimum" in checks:
        # isolated vertices break the degree bound (edgeless graphs are resilient)
        if resilient and connected:
            bad = [i for i in resilient if g.min_degree() < i + 1]
            flags["minimum"] = not bad
            if bad:
                notes["minimum"] = bad
        else:
            flags["minimum"] = None

    if "kab" in checks:
        if resilient and connected:
            cut = min_cut_endpoints(g)
            ends = vset(x for e in cut for x in e).bit_count()
            bad = [i for i in resilient if ends <= i]
            flags["kab"] = not bad
            if bad:
                notes["kab"] = {"levels": bad, "cut": [list(e) for e in cut]}
        else:
            flags["kab"] = None

    if "minusone" in checks:
        if resilient:
            bad = []
            for v in range(n):
                h, _ = delete_vertex(g, v)
                if zs[0] - zl(h, 0, prune) == -1:
                    bad.append(v)
            flags["minusone"] = not bad
            if bad:
                notes["minusone"] = bad
        else:
            flags["minusone"] = None

    if "delete" in checks:
        d0, d1 = [], []
        for e in g.edges():
            h = delete_edge(g, e)
            d0.append(zs[0] - zl(h, 0, prune))
            d1.append((zs[1] - zl(h, 1, prune), e))
        ok0 = all(-1 <= d <= 1 for d in d0)
        ok1 = all(d >= -2 for d, _ in d1)
        flags["delete"] = ok0 and ok1 if d0 else None
        extra["delta1"] = sorted({d for d, _ in d1})
        extra["delta1_edges"] = {}
        for d, e in d1:
            extra["delta1_edges"].setdefault(d, list(e))
        if not (ok0 and ok1):
            notes["delete"] = {"delta0": d0, "delta1": [d for d, _ in d1]}

    if "independent" in checks:
        k = zs[0]
        # for k = 2 the claim only holds on at most k + 1 vertices (C_n has Z_0 = Z_1 = 2)
        if n >= 2 and k >= 2 and (k >= 3 or n <= k + 1):
            zk = zs[k - 1] if k - 1 < len(zs) else zl(g, k - 1, prune)
            if zk == k:
                flags["independent"] = classification_shape(g, k) is not None
            else:
                flags["independent"] = None
        else:
            flags["independent"] = None

    if "reversal" in checks:
        flags["reversal"] = _check_reversals(g, zs[0])

    if "absorb" in checks:
        flags["absorb"] = _check_absorb(g, max(l, 1))

    rec = {"graph6": emit_graph6(g), "n": n, "m": g.num_edges(), "Z": zs[:l + 1],
           "checks": {c: flags.get(c) for c in checks}}
    if notes:
        rec["notes"] = {k: v for k, v in notes.items()}
    if extra:
        rec["extra"] = extra
    return rec


def _check_reversals(g: Graph, z0: int) -> bool:
    """Reversal of every minimum zero forcing set forces; set plus reversal is 1-leaky."""
    from .solver import _accepts, all_minimum_leaky_sets
    full = g.vertices
    for b in all_minimum_leaky_sets(g, 0, prune=False, max_n=g.n):
        r = reversal(g, run_process(g, b))
        if closure(g, r) != full:
            return False
        if g.n >= 1 and not _accepts(g, b | r, min(1, g.n)):
            return False
    return True


def _check_absorb(g: Graph, top: int) -> bool:
    """Sets surviving ``l - 1`` leaks colour every set of ``l`` leaks blue."""
    from itertools import combinations
    from .solver import _accepts
    for l in range(1, min(top, g.n) + 1):  # noqa: E741
        for b in range(1 << g.n):
            if not _accepts(g, b, l - 1):
                continue
            for combo in combinations(range(g.n), l):
                leaks = vset(combo)
                if leaks & ~closure(g, b, leaks):
                    return False
    return True


def _check_one(args):
    g6, l, checks, prune = args
    return check_graph(parse_graph6(g6), l, checks, prune)


def sweep(graphs: list[Graph], l: int, checks: Iterable[str], corpus: str = "",  # noqa: E741
          jobs: int = 1, prune: bool = False) -> SweepReport:
    from .parallel import ordered_map
    checks = tuple(checks)
    unknown = set(checks) - set(CHECKS)
    if unknown:
        raise ValueError(f"unknown checks: {sorted(unknown)}")
    items = [(emit_graph6(g), l, checks, prune) for g in graphs]
    records = ordered_map(_check_one, items, jobs)
    report = SweepReport(corpus, l, checks, records)
    for r in records:
        for c in checks:
            if r["checks"].get(c) is False:
                report.failures.append({"graph6": r["graph6"], "check": c,
                                        "detail": r.get("notes", {}).get(c)})
        for d, e in sorted(r.get("extra", {}).get("delta1_edges", {}).items()):
            report.delta_witnesses.setdefault(d, {"graph6": r["graph6"], "edge": e})
    return report
