"""Process-pool sharding that reproduces the single-threaded answer.

Work is cut into ordered blocks; results are scanned in block order so the
first hit is the same one a sequential scan would find.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from itertools import combinations, islice
from typing import Iterable, Iterator, Optional

from .forcing import closure
from .graph import Graph, vset

BLOCK = 512


def _blocks(it: Iterable, size: int) -> Iterator[list]:
    it = iter(it)
    while True:
        chunk = list(islice(it, size))
        if not chunk:
            return
        yield chunk


def _scan_leaks(args):
    g, blue, combos = args
    full = g.vertices
    for c in combos:
        leaks = vset(c)
        if closure(g, blue, leaks) != full:
            return leaks
    return None


def first_failing_leak_set(g: Graph, blue: int, l: int, jobs: int) -> Optional[int]:  # noqa: E741
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        work = ((g, blue, chunk) for chunk in _blocks(combinations(range(g.n), l), BLOCK))
        for hit in pool.map(_scan_leaks, work):
            if hit is not None:
                return hit
    return None


def _scan_candidates(args):
    from .solver import _accepts
    g, l, candidates, offset = args
    for i, c in enumerate(candidates):
        if _accepts(g, c, l):
            return offset + i, c
    return None


def first_accepted(g: Graph, l: int, candidates: Iterable[int], jobs: int):  # noqa: E741
    """``(index, mask)`` of the first candidate that is ``l``-leaky, or ``None``."""
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        work = []
        offset = 0
        for chunk in _blocks(candidates, BLOCK):
            work.append((g, l, chunk, offset))
            offset += len(chunk)
        for hit in pool.map(_scan_candidates, work):
            if hit is not None:
                return hit
    return None


def ordered_map(fn, items: list, jobs: int) -> list:
    if jobs <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))
