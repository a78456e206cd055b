"""The zero forcing color change rule with leaks.

A blue vertex that is not a leak and has exactly one white neighbour forces
that neighbour blue.  All sets are bit masks (see :mod:`leakyforcing.graph`).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import NamedTuple

from .graph import Graph, members


class ForcingError(ValueError):
    pass


class Force(NamedTuple):
    source: int
    target: int

    def __str__(self):
        return f"{self.source}->{self.target}"


@dataclass(frozen=True)
class ForcingProcess:
    initial: int
    leaks: int
    steps: tuple[Force, ...]
    final: int

    @property
    def targets(self) -> int:
        mask = 0
        for f in self.steps:
            mask |= 1 << f.target
        return mask

    def to_json(self) -> str:
        return json.dumps({
            "initial": members(self.initial),
            "leaks": members(self.leaks),
            "steps": [[f.source, f.target] for f in self.steps],
            "final": members(self.final),
        })

    @classmethod
    def from_json(cls, text: str) -> "ForcingProcess":
        d = json.loads(text)
        mask = lambda xs: sum(1 << x for x in xs)  # noqa: E731
        return cls(mask(d["initial"]), mask(d.get("leaks", [])),
                   tuple(Force(u, v) for u, v in d["steps"]), mask(d["final"]))


@dataclass(frozen=True)
class ForcingChain:
    vertices: tuple[int, ...] = field(default_factory=tuple)

    @property
    def start(self) -> int:
        return self.vertices[0]

    @property
    def end(self) -> int:
        return self.vertices[-1]


def _single_white(g: Graph, u: int, blue: int) -> int:
    """The unique white neighbour of ``u`` as a bit, or 0."""
    white = g.adj[u] & ~blue
    if white and not white & (white - 1):
        return white
    return 0


def valid_forces(g: Graph, blue: int, leaks: int = 0) -> list[Force]:
    out = []
    for u in members(blue & ~leaks):
        w = _single_white(g, u, blue)
        if w:
            out.append(Force(u, w.bit_length() - 1))
    return out


def closure(g: Graph, blue: int, leaks: int = 0, forbidden: int = 0) -> int:
    """Maximal blue set reachable from ``blue``.

    Vertices in ``leaks`` never force; vertices in ``forbidden`` are never
    forced.  The result does not depend on the order forces are applied.
    """
    adj = g.adj
    active = blue & ~leaks
    while True:
        gained = 0
        for u in members(active):
            white = adj[u] & ~blue
            if white and not white & (white - 1):
                if white & forbidden:
                    continue
                gained |= white
                blue |= white
        if not gained:
            return blue
        active = blue & ~leaks


def run_process(g: Graph, blue: int, leaks: int = 0) -> ForcingProcess:
    """Record a forcing process; each step applies the lowest valid source."""
    current = blue
    steps = []
    while True:
        nxt = None
        for u in members(current & ~leaks):
            w = _single_white(g, u, current)
            if w:
                nxt = Force(u, w.bit_length() - 1)
                break
        if nxt is None:
            break
        steps.append(nxt)
        current |= 1 << nxt.target
    return ForcingProcess(blue, leaks, tuple(steps), current)


def validate_process(g: Graph, p: ForcingProcess) -> None:
    """Replay ``p`` and raise ``ForcingError`` on the first invalid step."""
    blue = p.initial
    for f in p.steps:
        if not blue >> f.source & 1:
            raise ForcingError(f"{f}: source is white")
        if p.leaks >> f.source & 1:
            raise ForcingError(f"{f}: source is a leak")
        if _single_white(g, f.source, blue) != 1 << f.target:
            raise ForcingError(f"{f}: target is not the unique white neighbour")
        blue |= 1 << f.target
    if blue != p.final:
        raise ForcingError("final set does not match replay")


def chains(p: ForcingProcess) -> list[ForcingChain]:
    """Maximal forcing chains, one per initial vertex, in index order."""
    nxt = {f.source: f.target for f in p.steps}
    out = []
    for start in members(p.initial):
        seq = [start]
        while seq[-1] in nxt:
            seq.append(nxt[seq[-1]])
        out.append(ForcingChain(tuple(seq)))
    return out


def reversal(g: Graph, p: ForcingProcess) -> int:
    """Ends of the maximal forcing chains of a complete process."""
    if p.final != g.vertices:
        raise ForcingError("reversal needs a complete forcing process")
    sources = 0
    for f in p.steps:
        sources |= 1 << f.source
    return g.vertices & ~sources


def possible_forces(g: Graph, blue: int, leaks: int = 0) -> list[Force]:
    """Every force occurring in some complete process of ``blue`` avoiding ``leaks``.

    For each white target ``v`` take the largest blue set reachable without
    forcing ``v``.  Any process reaches ``v``'s force from a subset of it, and a
    pending force into ``v`` stays valid as that set grows, so ``u -> v`` is
    possible exactly when ``u`` is ready to force ``v`` there and forcing ``v``
    lets the process finish.
    """
    full = g.vertices
    out = []
    for v in members(full & ~blue):
        bit = 1 << v
        reach = closure(g, blue, leaks, forbidden=bit)
        if closure(g, reach | bit, leaks) != full:
            continue
        for u in members(reach & g.adj[v] & ~leaks):
            if g.adj[u] & ~reach == bit:
                out.append(Force(u, v))
    out.sort()
    return out


def forcers_of(g: Graph, blue: int, leaks: int, v: int) -> int:
    """Sources of possible forces into ``v`` as a bit mask."""
    if blue >> v & 1:
        return 0
    bit = 1 << v
    reach = closure(g, blue, leaks, forbidden=bit)
    if closure(g, reach | bit, leaks) != g.vertices:
        return 0
    out = 0
    for u in members(reach & g.adj[v] & ~leaks):
        if g.adj[u] & ~reach == bit:
            out |= 1 << u
    return out


def switch_processes(g: Graph, p: ForcingProcess, other: ForcingProcess,
                     intermediate: int) -> ForcingProcess:
    """Follow ``p`` until ``intermediate`` is blue, then finish with ``other``.

    Forces of ``p`` into ``intermediate`` are applied first, then forces of
    ``other`` whose targets lie outside ``intermediate``, each round taking
    the first one that is valid.
    """
    if p.initial != other.initial:
        raise ForcingError("processes start from different blue sets")
    if intermediate & ~g.vertices or p.initial & ~intermediate:
        raise ForcingError("intermediate set must contain the initial set")

    def exhaust(blue, pending, leaks):
        steps = []
        pending = list(pending)
        progress = True
        while progress:
            progress = False
            for i, f in enumerate(pending):
                if (blue >> f.source & 1 and not leaks >> f.source & 1
                        and _single_white(g, f.source, blue) == 1 << f.target):
                    steps.append(f)
                    blue |= 1 << f.target
                    del pending[i]
                    progress = True
                    break
        return blue, steps, pending

    leaks = p.leaks | other.leaks
    first = [f for f in p.steps if intermediate >> f.target & 1]
    blue, head, rest = exhaust(p.initial, first, leaks)
    if blue != intermediate or rest:
        raise ForcingError("intermediate set is not obtainable using the first process")
    second = [f for f in other.steps if not intermediate >> f.target & 1]
    blue, tail, rest = exhaust(blue, second, leaks)
    if rest:
        raise ForcingError("second process could not be completed")
    return ForcingProcess(p.initial, leaks, tuple(head + tail), blue)
