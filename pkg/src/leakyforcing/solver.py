"""Exact zero forcing and leaky forcing numbers by ordered subset search.

Candidates of each size are visited in colex order (ascending bit mask), so
the reported witness is the colex-first minimum set.  With ``prune=True`` the
search is restricted and started using proven facts:

* every vertex of degree at most ``l`` belongs to every ``l``-leaky set;
* ``Z_l(G) = n`` exactly when the maximum degree is at most ``l``;
* ``Z_l >= l + 2`` when ``2 <= l <= n - 3``, and also for ``l`` in {0, 1}
  when the graph is neither a path nor a cycle;
* ``Z_l >= Z_{l-1}`` (used when the smaller value is already cached).

``prune=False`` is the plain exhaustive search, used to check those facts.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from .forcing import closure, reversal, run_process
from .graph import (Graph, connected_components, delete_edge, delete_vertex, emit_graph6,
                    is_cycle, is_path, members, vset, GRAPH6_MAX_N)


class SolverError(ValueError):
    pass


EXHAUSTIVE_CAP = {0: 14, 1: 14}
EXHAUSTIVE_CAP_HIGH = 12
PRUNED_CAP = 24


@dataclass
class SolveResult:
    value: int
    witness: int
    l: int  # noqa: E741
    bounds_used: dict = field(default_factory=dict)
    stats: dict = field(default_factory=dict)
    certified: bool = True

    def to_dict(self, g: Optional[Graph] = None) -> dict:
        out = {}
        if g is not None:
            out["graph"] = emit_graph6(g) if g.n <= GRAPH6_MAX_N else None
        out.update({"l": self.l, "value": self.value, "witness": members(self.witness),
                    "certified": self.certified})
        return out

    def to_json(self, g: Optional[Graph] = None) -> str:
        return json.dumps(self.to_dict(g))


def default_cap(l: int, prune: bool) -> int:  # noqa: E741
    if prune:
        return PRUNED_CAP
    return EXHAUSTIVE_CAP.get(l, EXHAUSTIVE_CAP_HIGH)


_cache: dict = {}


def clear_cache() -> None:
    _cache.clear()


def colex_subsets(pool: list[int], k: int):
    """``k``-subsets of ``pool`` as bit masks in colex order."""
    r = len(pool)
    if k < 0 or k > r:
        return
    if k == 0:
        yield 0
        return
    bits = [1 << v for v in pool]
    x = (1 << k) - 1
    limit = 1 << r
    while x < limit:
        mask = 0
        y = x
        while y:
            low = y & -y
            mask |= bits[low.bit_length() - 1]
            y ^= low
        yield mask
        c = x & -x
        s = x + c
        x = (((s ^ x) >> 2) // c) | s


def _accepts(g: Graph, blue: int, l: int) -> bool:  # noqa: E741
    full = g.vertices
    if closure(g, blue) != full:
        return False
    if l == 0:
        return True
    for combo in combinations(range(g.n), l):
        if closure(g, blue, vset(combo)) != full:
            return False
    return True


def lower_bound(g: Graph, l: int, prune: bool = True) -> tuple[int, dict]:  # noqa: E741
    """Starting size for the search and the facts that produced it."""
    n = g.n
    if not prune:
        return 0, {}
    used = {}
    mandatory = sum(1 for d in g.degrees() if d <= l)
    used["mandatory"] = mandatory
    best = mandatory
    if 2 <= l <= n - 3:
        used["l_plus_2"] = l + 2
        best = max(best, l + 2)
    elif l in (0, 1) and l <= n - 3 and not is_path(g) and not is_cycle(g):
        used["l_plus_2_non_path_cycle"] = l + 2
        best = max(best, l + 2)
    elif l in (0, 1) and n >= 2 and (is_path(g) or is_cycle(g)):
        used["path_cycle"] = l + 1
        best = max(best, l + 1)
    if l >= 1:
        prev = _cache.get((g.n, g.adj, l - 1, True)) or _cache.get((g.n, g.adj, l - 1, False))
        if prev is not None:
            used["previous_l"] = prev.value
            best = max(best, prev.value)
    return min(best, n), used


def leaky_forcing_number(g: Graph, l: int, prune: bool = True,  # noqa: E741
                         max_n: Optional[int] = None, jobs: int = 1) -> SolveResult:
    """Minimum ``l``-leaky forcing set, certified by exhausting smaller sizes."""
    if l < 0:
        raise SolverError("leak count must be nonnegative")
    cap = default_cap(l, prune) if max_n is None else max_n
    if g.n > cap:
        raise SolverError(f"{g.n} vertices exceeds the solver cap of {cap}")
    l_eff = min(l, g.n)
    key = (g.n, g.adj, l_eff, prune)
    if key in _cache:
        return _cache[key]
    t0 = time.perf_counter()
    full = g.vertices
    if prune and g.max_degree() <= l_eff:
        res = SolveResult(g.n, full, l, {"max_degree": g.max_degree()}, {"examined": 0})
        _cache[key] = res
        return res
    start, used = lower_bound(g, l_eff, prune)
    mandatory = vset(v for v in range(g.n) if g.degree(v) <= l_eff) if prune else 0
    if prune and l_eff == 1:
        zres = leaky_forcing_number(g, 0, prune, cap, jobs)
        seed = zres.witness | reversal(g, run_process(g, zres.witness))
        used["upper_seed"] = seed.bit_count()
        start = max(start, zres.value)
        used["previous_l"] = zres.value
    free = members(full & ~mandatory)
    base = mandatory.bit_count()
    examined = 0
    for size in range(start, g.n + 1):
        k = size - base
        if k < 0:
            continue
        cands = (mandatory | s for s in colex_subsets(free, k))
        if jobs > 1:
            from .parallel import first_accepted
            cands = list(cands)
            hit = first_accepted(g, l_eff, cands, jobs)
            if hit is not None:
                examined += hit[0] + 1
                res = SolveResult(size, hit[1], l, used, {"examined": examined})
                break
            examined += len(cands)
            continue
        found = None
        for c in cands:
            examined += 1
            if _accepts(g, c, l_eff):
                found = c
                break
        if found is not None:
            res = SolveResult(size, found, l, used, {"examined": examined})
            break
    else:  # pragma: no cover - V(G) always works
        raise SolverError("no leaky forcing set found")
    res.stats["seconds"] = time.perf_counter() - t0
    _cache[key] = res
    return res


def zero_forcing_number(g: Graph, prune: bool = True, max_n: Optional[int] = None,
                        jobs: int = 1) -> SolveResult:
    return leaky_forcing_number(g, 0, prune, max_n, jobs)


def component_sum(g: Graph, l: int, **kw) -> int:  # noqa: E741
    """``Z_l`` computed component by component.

    Each component must survive up to ``l`` leaks on its own, and leaks in one
    component cannot affect another, so the global value is the sum.
    """
    total = 0
    for comp in connected_components(g):
        h, _ = g.induced(comp)
        total += leaky_forcing_number(h, min(l, h.n), **kw).value
    return total


def all_minimum_leaky_sets(g: Graph, l: int, prune: bool = True,  # noqa: E741
                           max_n: Optional[int] = None) -> list[int]:
    value = leaky_forcing_number(g, l, prune, max_n).value
    l_eff = min(l, g.n)
    mandatory = vset(v for v in range(g.n) if g.degree(v) <= l_eff) if prune else 0
    free = members(g.vertices & ~mandatory)
    k = value - mandatory.bit_count()
    return [mandatory | s for s in colex_subsets(free, k) if _accepts(g, mandatory | s, l_eff)]


def edge_deletion_delta(g: Graph, l: int, **kw) -> dict:  # noqa: E741
    """``Z_l(G) - Z_l(G - e)`` for every edge, with min/max summary."""
    z = component_sum(g, l, **kw)
    deltas = {e: z - component_sum(delete_edge(g, e), l, **kw) for e in g.edges()}
    vals = list(deltas.values())
    return {"value": z, "deltas": deltas,
            "min": min(vals, default=None), "max": max(vals, default=None)}


def vertex_deletion_delta(g: Graph, l: int, **kw) -> dict:  # noqa: E741
    z = component_sum(g, l, **kw)
    deltas = {}
    for v in range(g.n):
        h, _ = delete_vertex(g, v)
        deltas[v] = z - component_sum(h, l, **kw)
    vals = list(deltas.values())
    return {"value": z, "deltas": deltas,
            "min": min(vals, default=None), "max": max(vals, default=None)}


@dataclass
class ExtendabilityReport:
    l: int  # noqa: E741
    z0: int
    zl: int
    min_zero_forcing_sets: list
    min_leaky_sets: list
    extendable: list
    not_extendable: list

    @property
    def contains_min_zfs(self) -> bool:
        """Some minimum leaky set contains some minimum zero forcing set."""
        return bool(self.extendable)

    def extends(self, zfs: int) -> bool:
        if zfs not in self.min_zero_forcing_sets:
            raise SolverError("not a minimum zero forcing set")
        return zfs in self.extendable

    def to_dict(self) -> dict:
        return {"l": self.l, "z0": self.z0, "zl": self.zl,
                "contains_min_zfs": self.contains_min_zfs,
                "min_zero_forcing_sets": len(self.min_zero_forcing_sets),
                "min_leaky_sets": len(self.min_leaky_sets),
                "extendable": [members(b) for b in self.extendable],
                "not_extendable": [members(b) for b in self.not_extendable]}


def extendability_experiment(g: Graph, l: int, max_n: Optional[int] = None) -> ExtendabilityReport:  # noqa: E741
    """Which minimum zero forcing sets grow into minimum ``l``-leaky sets.

    Exhaustive over both families of minimum sets; gathers evidence only.
    """
    zfs = all_minimum_leaky_sets(g, 0, max_n=max_n)
    leaky = all_minimum_leaky_sets(g, l, max_n=max_n)
    ext, stuck = [], []
    for b in zfs:
        (ext if any(b & s == b for s in leaky) else stuck).append(b)
    return ExtendabilityReport(l, zfs[0].bit_count(), leaky[0].bit_count(), zfs, leaky, ext, stuck)


def resilience_classification(k: int) -> list[Graph]:
    """Graphs on 2..k+1 vertices (up to isomorphism) with ``Z_0 = Z_{k-1} = k``."""
    from .corpus import all_graphs
    if not 1 <= k <= 6:
        raise SolverError("classification supports 1 <= k <= 6")
    found = []
    for n in range(max(2, k), k + 2):
        for g in all_graphs(n, connected=False):
            if zero_forcing_number(g, prune=False, max_n=n).value != k:
                continue
            if leaky_forcing_number(g, k - 1, prune=False, max_n=n).value == k:
                found.append(g)
    return found


def classification_shape(g: Graph, k: int) -> Optional[str]:
    """Which listed shape ``g`` has: ``K_{k+1}``, ``K_a + (k+1-a)K_1`` (a >= 2), or ``kK_1``."""
    degs = g.degrees()
    m = g.num_edges()
    if g.n == k and m == 0:
        return f"empty({k})"
    if g.n == k + 1 and m == g.n * (g.n - 1) // 2:
        return f"K{k + 1}"
    if g.n == k + 1:
        comps = connected_components(g)
        big = [c for c in comps if c.bit_count() > 1]
        if len(big) == 1:
            a = big[0].bit_count()
            if a >= 2 and all(degs[v] == a - 1 for v in members(big[0])):
                return f"K{a}+{k + 1 - a}K1"
    return None
