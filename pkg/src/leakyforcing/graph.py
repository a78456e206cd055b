"""Simple graphs with bit-set adjacency.

Vertex sets are plain ``int`` bit masks: bit ``v`` set means vertex ``v`` is
in the set.  Python ints are arbitrary precision, so the width limit below is
a policy check on graph construction, not a storage constraint.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

DEFAULT_WIDTH = 64
GRAPH6_MAX_N = 62


class GraphError(ValueError):
    pass


# ---------------------------------------------------------------------------
# vertex sets
# ---------------------------------------------------------------------------

def vset(vertices: Iterable[int]) -> int:
    """Bit mask for an iterable of vertex indices."""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: int) -> list[int]:
    """Sorted vertex indices of a bit mask."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def popcount(mask: int) -> int:
    return mask.bit_count()


def full_mask(n: int) -> int:
    return (1 << n) - 1


# ---------------------------------------------------------------------------
# Graph
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``adj[v]`` is the neighbourhood of ``v`` as a bit mask.  ``labels`` is an
    optional tuple of per-vertex display tags.
    """

    n: int
    adj: tuple[int, ...]
    labels: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise GraphError(f"adjacency has {len(self.adj)} rows, expected {self.n}")
        if self.labels is not None and len(self.labels) != self.n:
            raise GraphError("label count does not match vertex count")

    @property
    def vertices(self) -> int:
        return full_mask(self.n)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in members(self.adj[u] >> (u + 1) << (u + 1))]

    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def check(self) -> None:
        """Raise ``GraphError`` unless adjacency is symmetric and loop-free."""
        for v in range(self.n):
            a = self.adj[v]
            if a >> self.n:
                raise GraphError(f"vertex {v} has a neighbour out of range")
            if a >> v & 1:
                raise GraphError(f"self-loop at {v}")
            for u in members(a):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric edge {v}-{u}")

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        adj = [0] * self.n
        for v in range(self.n):
            adj[perm[v]] = vset(perm[u] for u in members(self.adj[v]))
        labels = None
        if self.labels is not None:
            labels = [""] * self.n
            for v in range(self.n):
                labels[perm[v]] = self.labels[v]
            labels = tuple(labels)
        return Graph(self.n, tuple(adj), labels)

    def induced(self, keep: int) -> tuple["Graph", dict[int, int]]:
        """Induced subgraph on the mask ``keep``, densely reindexed.

        Returns the subgraph and the old -> new index map.
        """
        old = members(keep)
        index = {v: i for i, v in enumerate(old)}
        adj = tuple(vset(index[u] for u in members(self.adj[v] & keep)) for v in old)
        labels = tuple(self.labels[v] for v in old) if self.labels is not None else None
        return Graph(len(old), adj, labels), index


def _check_width(n: int, width: Optional[int]) -> None:
    limit = DEFAULT_WIDTH if width is None else width
    if n > limit:
        raise GraphError(f"{n} vertices exceeds the configured width of {limit}")


def from_edge_list(n: int, edges: Iterable[tuple[int, int]], labels=None,
                   width: Optional[int] = None) -> Graph:
    if n < 0:
        raise GraphError("negative vertex count")
    _check_width(n, width)
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop at {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj), tuple(labels) if labels is not None else None)


def complete_graph(n: int) -> Graph:
    full = full_mask(n)
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)], width=n)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycles need at least 3 vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)], width=n)


# ---------------------------------------------------------------------------
# mutation by copy
# ---------------------------------------------------------------------------

def delete_vertex(g: Graph, v: int) -> tuple[Graph, dict[int, int]]:
    """``G - v`` with the old -> new index map of surviving vertices."""
    if not 0 <= v < g.n:
        raise GraphError(f"no vertex {v}")
    return g.induced(g.vertices & ~(1 << v))


def delete_edge(g: Graph, e: tuple[int, int]) -> Graph:
    u, v = e
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise GraphError(f"no edge {u}-{v}")
    adj = list(g.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph(g.n, tuple(adj), g.labels)


def cartesian_product(g: Graph, h: Graph, width: Optional[int] = None) -> Graph:
    """``G □ H``; vertex ``(a, b)`` gets index ``a * |H| + b``."""
    if g.n == 0 or h.n == 0:
        raise GraphError("cartesian product of an empty graph")
    n = g.n * h.n
    _check_width(n, width)
    adj = []
    labels = []
    for a in range(g.n):
        for b in range(h.n):
            nb = 0
            for b2 in members(h.adj[b]):
                nb |= 1 << (a * h.n + b2)
            for a2 in members(g.adj[a]):
                nb |= 1 << (a2 * h.n + b)
            adj.append(nb)
            labels.append(f"({g.label(a)},{h.label(b)})")
    return Graph(n, tuple(adj), tuple(labels))


# ---------------------------------------------------------------------------
# structure
# ---------------------------------------------------------------------------

def component_of(g: Graph, v: int, within: Optional[int] = None) -> int:
    allowed = g.vertices if within is None else within
    seen = 1 << v
    frontier = seen
    while frontier:
        nxt = 0
        for u in members(frontier):
            nxt |= g.adj[u]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def connected_components(g: Graph) -> list[int]:
    """Components as bit masks, ordered by their lowest vertex."""
    left = g.vertices
    comps = []
    while left:
        v = (left & -left).bit_length() - 1
        c = component_of(g, v)
        comps.append(c)
        left &= ~c
    return comps


def is_connected(g: Graph) -> bool:
    return g.n == 0 or component_of(g, 0) == g.vertices


def is_path(g: Graph) -> bool:
    if g.n == 0 or not is_connected(g):
        return False
    if g.n <= 2:
        return True
    degs = sorted(g.degrees())
    return degs[:2] == [1, 1] and all(d == 2 for d in degs[2:])


def is_cycle(g: Graph) -> bool:
    return g.n >= 3 and is_connected(g) and all(d == 2 for d in g.degrees())


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and is_connected(g) and g.num_edges() == g.n - 1


# ---------------------------------------------------------------------------
# text formats
# ---------------------------------------------------------------------------

def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise GraphError("empty graph6 line")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise GraphError(f"graph6 character {ch!r} outside 63..126")
    n = ord(s[0]) - 63
    if n > GRAPH6_MAX_N:
        raise GraphError("long-form graph6 (n > 62) is not supported")
    nbits = n * (n - 1) // 2
    nchars = -(-nbits // 6)
    body = s[1:]
    if len(body) != nchars:
        raise GraphError(f"graph6 body has {len(body)} chars, expected {nchars} for n={n}")
    value = 0
    for ch in body:
        value = value << 6 | (ord(ch) - 63)
    pad = nchars * 6 - nbits
    if value & ((1 << pad) - 1):
        raise GraphError("nonzero graph6 padding bits")
    value >>= pad
    adj = [0] * n
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if value >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k -= 1
    return Graph(n, tuple(adj))


def emit_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise GraphError("long-form graph6 (n > 62) is not supported")
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(g.adj[i] >> j & 1)
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(g.n + 63)]
    for c in range(0, len(bits), 6):
        val = 0
        for b in bits[c:c + 6]:
            val = val << 1 | b
        out.append(chr(val + 63))
    return "".join(out)


def parse_edge_list(text: str, width: Optional[int] = None) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v``; ``#`` starts a comment."""
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows:
        raise GraphError("empty edge list")
    try:
        header = [int(x) for x in rows[0]]
        body = [tuple(int(x) for x in r) for r in rows[1:]]
    except ValueError as exc:
        raise GraphError(f"non-integer token in edge list: {exc}") from None
    if len(header) != 2:
        raise GraphError("edge list header must be 'n m'")
    n, m = header
    if len(body) != m:
        raise GraphError(f"edge list declares {m} edges but has {len(body)}")
    if any(len(r) != 2 for r in body):
        raise GraphError("edge lines must be 'u v'")
    return from_edge_list(n, body, width=width)


def emit_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.num_edges()}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"
