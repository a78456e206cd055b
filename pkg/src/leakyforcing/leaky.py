"""Deciding whether a blue set survives any choice of leaks.

Two independent verifiers are provided.  ``verify_leaky_adversary`` tries
every leak set; ``verify_leaky_characterization`` climbs one leak at a time,
requiring every white vertex to have two distinct possible forcers under
every smaller leak set.  They must always agree.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from .forcing import closure, forcers_of, reversal, run_process
from .graph import Graph, connected_components, delete_vertex, is_connected, members, vset


class LeakyError(ValueError):
    pass


@dataclass(frozen=True)
class LeakyVerdict:
    accepted: bool
    l: int  # noqa: E741
    method: str
    witness: Optional[int] = None
    stalled: Optional[int] = None

    def to_dict(self) -> dict:
        return {
            "accepted": self.accepted,
            "l": self.l,
            "witness": members(self.witness) if self.witness is not None else None,
            "method": self.method,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


@dataclass(frozen=True)
class StructuralReport:
    l: int  # noqa: E741
    min_degree_ok: bool
    cut_checked: bool
    forbidden_cut: Optional[tuple[tuple[int, int], ...]] = None
    vertex_deletion_flag: Optional[int] = None
    deletion_deltas: dict = field(default_factory=dict)

    @property
    def passes(self) -> bool:
        return (self.min_degree_ok and self.forbidden_cut is None
                and self.vertex_deletion_flag is None)


def is_zero_forcing_set(g: Graph, blue: int) -> bool:
    return closure(g, blue) == g.vertices


def _check_l(g: Graph, l: int) -> None:  # noqa: E741
    if not 0 <= l <= g.n:
        raise LeakyError(f"leak count {l} outside 0..{g.n}")


def verify_leaky_adversary(g: Graph, blue: int, l: int, jobs: int = 1) -> LeakyVerdict:  # noqa: E741
    """Exhaustive check over all leak sets of size ``l`` in lexicographic order.

    Closures only shrink as leaks are added, so size exactly ``l`` suffices.
    """
    _check_l(g, l)
    full = g.vertices
    if jobs > 1:
        from .parallel import first_failing_leak_set
        hit = first_failing_leak_set(g, blue, l, jobs)
        if hit is None:
            return LeakyVerdict(True, l, "adversary")
        return LeakyVerdict(False, l, "adversary", hit, closure(g, blue, hit))
    for combo in combinations(range(g.n), l):
        leaks = vset(combo)
        reach = closure(g, blue, leaks)
        if reach != full:
            return LeakyVerdict(False, l, "adversary", leaks, reach)
    return LeakyVerdict(True, l, "adversary")


def verify_leaky_characterization(g: Graph, blue: int, l: int) -> LeakyVerdict:  # noqa: E741
    """Recursive two-forcer test.

    Level 0 asks for a zero forcing set.  Level ``k`` additionally asks that for
    every leak set ``L`` of size ``k - 1`` each white vertex has at least two
    possible forcers avoiding ``L``.  A failing vertex with single forcer ``x``
    yields the stalling leak set ``L + {x}``.
    """
    _check_l(g, l)
    full = g.vertices
    reach = closure(g, blue)
    if reach != full:
        return LeakyVerdict(False, l, "characterization", 0, reach)
    white = members(full & ~blue)
    for level in range(1, l + 1):
        for combo in combinations(range(g.n), level - 1):
            leaks = vset(combo)
            for v in white:
                f = forcers_of(g, blue, leaks, v)
                if f & (f - 1):
                    continue
                # (level-1)-leaky guarantees at least one forcer here
                witness = leaks | f
                stalled = closure(g, blue, witness)
                if stalled == full:
                    raise AssertionError("characterization witness failed to stall")
                return LeakyVerdict(False, l, "characterization", witness, stalled)
    return LeakyVerdict(True, l, "characterization")


def verify(g: Graph, blue: int, l: int, method: str = "adversary") -> LeakyVerdict:  # noqa: E741
    if method == "adversary":
        return verify_leaky_adversary(g, blue, l)
    if method == "characterization":
        return verify_leaky_characterization(g, blue, l)
    raise LeakyError(f"unknown method {method!r}")


def is_leaky_forcing_set(g: Graph, blue: int, l: int) -> bool:  # noqa: E741
    return verify_leaky_adversary(g, blue, l).accepted


def is_resilient(g: Graph, l: int, **kw) -> bool:  # noqa: E741
    from .solver import leaky_forcing_number, zero_forcing_number
    return zero_forcing_number(g, **kw).value == leaky_forcing_number(g, l, **kw).value


def lemma_reversal_witness(g: Graph, blue: int, chosen: int) -> int:
    """A zero forcing set of size ``|blue|`` containing ``chosen``.

    Treat ``chosen`` as leaks; since leaks never force they end their chains,
    so the reversal of the resulting process contains them.
    """
    p = run_process(g, blue, chosen)
    if p.final != g.vertices:
        raise LeakyError("blue set does not survive the chosen vertices as leaks")
    return reversal(g, p)


def min_cut_endpoints(g: Graph) -> Optional[tuple[tuple[int, int], ...]]:
    """Edge cut ``δ(S)`` with the fewest endpoints over all bipartitions.

    Any disconnecting edge set contains some ``δ(S)`` whose endpoints are a
    subset of its own, so bipartitions suffice.  Returns ``None`` for graphs
    with fewer than two vertices.
    """
    if g.n < 2:
        return None
    best = None
    best_size = g.n + 1
    full = g.vertices
    # fix vertex 0 on the S side to visit each bipartition once
    for s in range(1 << (g.n - 1)):
        side = (s << 1) | 1
        if side == full:
            continue
        ends = 0
        cut = []
        for u in members(side):
            out = g.adj[u] & ~side
            if out:
                ends |= (1 << u) | out
                cut.extend((min(u, w), max(u, w)) for w in members(out))
        size = ends.bit_count()
        if size < best_size:
            best_size = size
            best = tuple(sorted(cut))
    return best


CUT_SCREEN_MAX_N = 12


def structural_screen(g: Graph, l: int, **solver_kw) -> StructuralReport:  # noqa: E741
    """Necessary conditions for ``l``-resilience and which of them fail.

    * minimum degree at least ``l + 1``;
    * no edge cut whose edges span at most ``l`` vertices (connected graphs
      with at most ``CUT_SCREEN_MAX_N`` vertices only);
    * no vertex whose deletion raises the zero forcing number by one.
    """
    from .solver import zero_forcing_number, component_sum
    if l < 1:
        raise LeakyError("structural screen needs l >= 1")
    min_ok = g.min_degree() >= l + 1
    cut_checked = is_connected(g) and 2 <= g.n <= CUT_SCREEN_MAX_N
    bad_cut = None
    if cut_checked:
        cut = min_cut_endpoints(g)
        ends = vset(x for e in cut for x in e)
        if ends.bit_count() <= l:
            bad_cut = cut
    z = zero_forcing_number(g, **solver_kw).value
    flag = None
    deltas = {}
    for v in range(g.n):
        h, _ = delete_vertex(g, v)
        deltas[v] = z - component_sum(h, 0, **solver_kw)
        if deltas[v] == -1 and flag is None:
            flag = v
    return StructuralReport(l, min_ok, cut_checked, bad_cut, flag, deltas)


def components_leaky(g: Graph, blue: int, l: int) -> bool:  # noqa: E741
    """Per-component adversary check (each part faces up to ``l`` leaks)."""
    for comp in connected_components(g):
        h, index = g.induced(comp)
        sub = vset(index[v] for v in members(blue & comp))
        k = min(l, h.n)
        if not verify_leaky_adversary(h, sub, k).accepted:
            return False
    return True
