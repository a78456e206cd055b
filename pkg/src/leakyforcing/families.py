"""Named graph families, their explicit forcing sets and known values."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .forcing import closure
from .graph import (Graph, cartesian_product, complete_graph, cycle_graph,
                    from_edge_list, is_cycle, is_path, is_tree, path_graph, vset)
from .leaky import verify_leaky_adversary

FAMILIES = ("path", "cycle", "complete", "star", "spider", "tree", "grid", "supertriangle",
            "clique_prism", "clique_with_leaves")

ALIASES = {"cliqueprism": "clique_prism", "prism": "clique_prism",
           "cliqueleaves": "clique_with_leaves", "triangle": "supertriangle"}


class FamilyError(ValueError):
    pass


class UnknownValue(LookupError):
    """No proven value or bound covers the requested family and leak count."""


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: tuple = ()
    seed: int | None = None

    def __post_init__(self):
        name = ALIASES.get(self.name, self.name)
        if name not in FAMILIES:
            raise FamilyError(f"unknown family {self.name!r}")
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))


def _need(spec: FamilySpec, count: int):
    if len(spec.params) != count:
        raise FamilyError(f"{spec.name} takes {count} parameter(s), got {len(spec.params)}")
    return spec.params


def generate(spec: FamilySpec) -> Graph:
    name = spec.name
    if name == "path":
        (n,) = _need(spec, 1)
        if n < 1:
            raise FamilyError("path needs n >= 1")
        return path_graph(n)
    if name == "cycle":
        (n,) = _need(spec, 1)
        if n < 3:
            raise FamilyError("cycle needs n >= 3")
        return cycle_graph(n)
    if name == "complete":
        (n,) = _need(spec, 1)
        if n < 1:
            raise FamilyError("complete graph needs n >= 1")
        return complete_graph(n)
    if name == "star":
        (k,) = _need(spec, 1)
        if k < 1:
            raise FamilyError("star needs k >= 1 leaves")
        return from_edge_list(k + 1, [(0, i) for i in range(1, k + 1)], width=k + 1)
    if name == "spider":
        k, n = _need(spec, 2)
        return spider(k, n)
    if name == "tree":
        (n,) = _need(spec, 1)
        return random_tree(n, spec.seed if spec.seed is not None else 0)
    if name == "grid":
        n, m = _need(spec, 2)
        return grid(n, m)
    if name == "supertriangle":
        (n,) = _need(spec, 1)
        return supertriangle(n)
    if name == "clique_prism":
        (l,) = _need(spec, 1)  # noqa: E741
        return clique_prism(l)
    (l,) = _need(spec, 1)  # noqa: E741
    return clique_with_leaves(l)


def spider(k: int, n: int) -> Graph:
    """``k`` paths on ``n`` vertices glued at one endpoint (vertex 0)."""
    if k < 1 or n < 3:
        raise FamilyError("spider needs k >= 1 legs of order n >= 3")
    edges = []
    size = 1 + k * (n - 1)
    for leg in range(k):
        prev = 0
        for step in range(n - 1):
            v = 1 + leg * (n - 1) + step
            edges.append((prev, v))
            prev = v
    return from_edge_list(size, edges, width=size)


def random_tree(n: int, seed: int) -> Graph:
    """Uniform labelled tree on ``n`` vertices from a seeded Prufer sequence."""
    if n < 1:
        raise FamilyError("tree needs n >= 1")
    if n == 1:
        return Graph(1, (0,))
    if n == 2:
        return from_edge_list(2, [(0, 1)])
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [v for v in range(n) if degree[v] == 1]
    edges.append((u, v))
    return from_edge_list(n, edges, width=n)


def grid_index(n: int, m: int, row: int, col: int) -> int:
    """Index of grid vertex ``(row, col)`` with 1-based coordinates."""
    if not (1 <= row <= n and 1 <= col <= m):
        raise FamilyError(f"({row},{col}) outside a {n}x{m} grid")
    return (row - 1) * m + (col - 1)


def grid(n: int, m: int) -> Graph:
    """``P_n □ P_m`` with labels ``(row,col)``, rows 1..n and columns 1..m."""
    if n < 1 or m < 1:
        raise FamilyError("grid dimensions must be positive")
    g = cartesian_product(path_graph(n), path_graph(m), width=n * m)
    labels = tuple(f"({r},{c})" for r in range(1, n + 1) for c in range(1, m + 1))
    return Graph(g.n, g.adj, labels)


def clique_prism(l: int) -> Graph:  # noqa: E741
    """``K_{l+1} □ K_2``: vertices ``u1..u_{l+1}`` are 0..l, ``v_i`` is ``l + i``."""
    if l < 1:
        raise FamilyError("clique prism needs l >= 1")
    g = cartesian_product(complete_graph(2), complete_graph(l + 1))
    labels = tuple(f"u{i}" for i in range(1, l + 2)) + tuple(f"v{i}" for i in range(1, l + 2))
    return Graph(g.n, g.adj, labels)


def clique_with_leaves(l: int) -> Graph:  # noqa: E741
    """``K_{l+2}`` with ``l`` pendant vertices at each clique vertex.

    Clique vertices come first; the leaves of clique vertex ``c`` follow in
    a block.
    """
    if l < 1:
        raise FamilyError("clique_with_leaves needs l >= 1")
    k = l + 2
    n = k + k * l
    edges = [(a, b) for a in range(k) for b in range(a + 1, k)]
    for c in range(k):
        for j in range(l):
            edges.append((c, k + c * l + j))
    return from_edge_list(n, edges, width=n)


def leaves_of(g: Graph) -> int:
    return vset(v for v in range(g.n) if g.degree(v) == 1)


# ---------------------------------------------------------------------------
# supertriangle
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SupertriangleLayout:
    """Coordinates ``(r, c)`` with rows top-down, row ``r`` holding ``c = 0..r``.

    ``left(i)``, ``right(i)`` and ``bottom(i)`` are the i-th diagonal rows
    parallel to each side: the left side of what remains after removing the
    previous ``i`` left rows, and so on.
    """

    n: int
    coords: tuple = field(default_factory=tuple)

    def index(self, r: int, c: int) -> int:
        return r * (r + 1) // 2 + c

    def left(self, i: int) -> int:
        return vset(self.index(r, i) for r in range(i, self.n))

    def right(self, i: int) -> int:
        return vset(self.index(r, r - i) for r in range(i, self.n))

    def bottom(self, i: int) -> int:
        r = self.n - 1 - i
        return vset(self.index(r, c) for c in range(r + 1))


def supertriangle_layout(n: int) -> SupertriangleLayout:
    if n < 1:
        raise FamilyError("supertriangle needs n >= 1")
    coords = tuple((r, c) for r in range(n) for c in range(r + 1))
    return SupertriangleLayout(n, coords)


def supertriangle(n: int) -> Graph:
    lay = supertriangle_layout(n)
    edges = []
    for r, c in lay.coords:
        v = lay.index(r, c)
        if c < r:
            edges.append((v, lay.index(r, c + 1)))
        if r + 1 < n:
            edges.append((v, lay.index(r + 1, c)))
            edges.append((v, lay.index(r + 1, c + 1)))
    size = len(lay.coords)
    return from_edge_list(size, edges, labels=[f"({r},{c})" for r, c in lay.coords], width=size)


def supertriangle_leaky_set(n: int, l: int) -> int:  # noqa: E741
    """Bottom side for ``l <= 1``; left and right sides for ``l`` in {2, 3};
    all three sides for ``l`` in {4, 5}."""
    if n < 2:
        raise FamilyError("supertriangle construction needs n >= 2")
    lay = supertriangle_layout(n)
    if l < 0:
        raise FamilyError("negative leak count")
    if l <= 1:
        return lay.bottom(0)
    if l <= 3:
        return lay.left(0) | lay.right(0)
    if l <= 5:
        return lay.left(0) | lay.right(0) | lay.bottom(0)
    raise FamilyError("no construction known for more than 5 leaks")


# ---------------------------------------------------------------------------
# trees
# ---------------------------------------------------------------------------

def tree_leaky_set(t: Graph, l: int) -> int:  # noqa: E741
    """Vertices of degree at most ``l``; optimal for trees when ``l >= 1``."""
    if not is_tree(t):
        raise FamilyError("graph is not a tree")
    if l < 1:
        raise FamilyError("tree construction needs l >= 1")
    return vset(v for v in range(t.n) if t.degree(v) <= l)


# ---------------------------------------------------------------------------
# grids
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GridConstructionParams:
    n: int
    m: int
    x: int
    k: int
    j: int

    @property
    def violations(self) -> list[str]:
        """Arithmetic facts the construction is expected to satisfy but does not."""
        out = []
        if self.j < 1:
            out.append(f"j={self.j} < 1")
        if self.k < 2:
            out.append(f"k={self.k} < 2")
        if self.n % 2 and self.j < 2:
            out.append(f"j={self.j} < 2 with n odd")
        return out


def grid_params(n: int, m: int) -> GridConstructionParams:
    """``x`` is the least integer with ``n <= 2x + 3 <= m``; ``k = (m - 2x) // 2``."""
    if not 1 <= n <= m:
        raise FamilyError("need 1 <= n <= m")
    x = max(0, -(-(n - 3) // 2))
    if 2 * x + 3 > m:
        raise FamilyError(f"no x with {n} <= 2x+3 <= {m}")
    k = (m - 2 * x) // 2
    return GridConstructionParams(n, m, x, k, m - 2 * x - k)


def _halves(n: int, m: int, x: int, k: int, j: int) -> tuple[int, int]:
    first = {(i, x + k) for i in range(1, x + 1)} | {(x + 1, x + p) for p in range(1, k + 1)}
    second = ({(i, x + k + 1) for i in range(1, x + 1)}
              | {(x + 1, x + k + p) for p in range(1, j + 1)})
    return (vset(grid_index(n, m, r, c) for r, c in first),
            vset(grid_index(n, m, r, c) for r, c in second))


def grid_two_part_set(n: int, m: int) -> tuple[int, int]:
    """The two halves of the size-``m`` set for ``n < m``.

    The first half is column ``x + k`` over rows ``1..x`` plus row ``x + 1``
    across columns ``x + 1 .. x + k``; the second is column ``x + k + 1`` over
    rows ``1..x`` plus row ``x + 1`` across the next ``j`` columns.
    """
    p = grid_params(n, m)
    return _halves(n, m, p.x, p.k, p.j)


def grid_one_leaky_set(n: int, m: int, check: bool = True) -> int:
    """A 1-leaky forcing set of ``P_n □ P_m`` of size ``min(2n, m)``.

    * ``m >= 2n``: first and last columns (a column plus its reversal).
    * ``n < m < 2n``: the two-part T shape of :func:`grid_two_part_set`.
    * ``n == m``: the same T shape with ``x = (n - 1) // 2``.

    With ``check`` the result is confirmed by the exhaustive 1-leak verifier,
    which is polynomial for a single leak.
    """
    if not 1 <= n <= m:
        raise FamilyError("need 1 <= n <= m")
    if m == 1:
        return 1
    if 2 * n <= m:
        blue = vset(grid_index(n, m, r, c) for r in range(1, n + 1) for c in (1, m))
    elif n < m:
        a, b = grid_two_part_set(n, m)
        blue = a | b
    else:
        x = (n - 1) // 2
        k = (n - 2 * x) // 2
        a, b = _halves(n, m, x, k, n - 2 * x - k)
        blue = a | b
    if check and not verify_leaky_adversary(grid(n, m), blue, 1).accepted:
        raise FamilyError(f"grid construction failed for {n}x{m}")
    return blue


# ---------------------------------------------------------------------------
# known values
# ---------------------------------------------------------------------------

def _exact(value: int, reason: str) -> dict:
    return {"exact": value, "theorem": reason}


def _bounds(lower: int, upper: int, reason: str) -> dict:
    if lower == upper:
        return _exact(lower, reason)
    return {"lower": lower, "upper": upper, "theorem": reason}


def predicted_value(spec: FamilySpec, l: int) -> dict:  # noqa: E741
    """Proven ``Z_l`` value or interval for a family member.

    Raises :class:`UnknownValue` when no proven result applies.
    """
    if l < 0:
        raise FamilyError("negative leak count")
    name = spec.name
    if name == "grid":
        n, m = sorted(spec.params)
        spec = FamilySpec("grid", (n, m))
    g = generate(spec)
    nv = g.n
    if g.max_degree() <= l:
        return _exact(nv, "max degree <= l forces every vertex")
    low_deg = sum(1 for d in g.degrees() if d <= l)
    general_low = low_deg
    if 2 <= l <= nv - 3:
        general_low = max(general_low, l + 2)
    elif l <= 1 and l <= nv - 3 and not is_path(g) and not is_cycle(g):
        general_low = max(general_low, l + 2)

    if name in ("path", "cycle") and l <= 1:
        if name == "path" and l == 0:
            return _exact(1, "paths have zero forcing number 1")
        return _exact(2, "Z_1 = 2 exactly for paths and cycles")
    if name in ("tree", "star", "spider", "path") and l >= 1:
        return _exact(low_deg, "trees: the vertices of degree <= l")
    if name == "complete":
        # l < n - 1 here; V minus one vertex survives any l leaks
        return _exact(nv - 1, "complete graph: n - 1 while l < n - 1")
    if name == "supertriangle":
        n = spec.params[0]
        if l <= 1:
            return _exact(n, "supertriangle: bottom side, l <= 1")
        if l <= 3:
            return _bounds(general_low, 2 * n - 1, "supertriangle: two sides, l in {2,3}")
        if l <= 5:
            return _exact(3 * n - 3, "supertriangle: three sides, l in {4,5}")
        raise UnknownValue(f"supertriangle with l={l}")
    if name == "grid":
        n, m = spec.params
        if l == 1:
            if n == 1:
                return _exact(2, "Z_1 = 2 exactly for paths and cycles")
            if n == m:
                return _exact(n, "square grid: Z_1 = n")
            if m >= 2 * n * n:
                return _exact(2 * n, "long grid m >= 2n^2: Z_1 = 2n")
            return _bounds(general_low, min(2 * n, m), "grid: Z_1 <= min(2n, m)")
        if l >= 2:
            return _bounds(general_low, nv - 1, "general bounds: l + 2 <= Z_l < n")
    if name == "clique_with_leaves" and l == spec.params[0]:
        return _exact(low_deg, "clique with l leaves per vertex: the leaves")
    raise UnknownValue(f"no proven value for {name}{spec.params} with l={l}")


def verify_construction(g: Graph, blue: int, l: int) -> bool:  # noqa: E741
    return closure(g, blue) == g.vertices and verify_leaky_adversary(g, blue, l).accepted
